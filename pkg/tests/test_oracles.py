import json

import pytest

from kinklab import OracleStatus, run_all
from kinklab import oracles


def test_run_all_quick_passes():
    reports = run_all("quick")
    assert len(reports) == 9
    assert [r.check for r in reports] == sorted(r.check for r in reports)
    for r in reports:
        assert r.status is OracleStatus.PASS, (r.check, r.detail, r.witness)


def test_unknown_profile_rejected():
    with pytest.raises(ValueError):
        run_all("exhaustive")


def test_report_json_round_trip():
    r = run_all("quick")[0]
    payload = json.loads(r.to_json())
    assert payload["check"] == r.check
    assert payload["status"] == "Pass"
    assert "budget" in payload


@pytest.mark.parametrize("name", sorted(oracles._ORACLES))
def test_each_oracle_passes_individually(name):
    report = oracles._ORACLES[name](**oracles.PROFILES["quick"][name])
    assert report.status is OracleStatus.PASS, (report.detail, report.witness)


def test_figure_iterates_detects_corrupted_rule(monkeypatch):
    # negative control: a broken step function must be caught, not absorbed
    real = oracles.dynamics.step_word

    def corrupted(w, rule=None):
        out = real(w) if rule is None else real(w, rule)
        if out:
            flipped = "1" if out[0] == "0" else "0"
            out = flipped + out[1:]
        return out

    monkeypatch.setattr(oracles.dynamics, "step_word", corrupted)
    report = oracles.verify_figure_iterates()
    assert report.status is OracleStatus.FAIL
    assert report.witness is not None


def test_flipflop_violation_finds_wrong_partner():
    # 11001 genuinely pairs with 10011; a wrong partner yields a witness
    assert oracles.flipflop_violation("11001", "10011", 1) is None
    assert oracles.flipflop_violation("11001", "11011", 1) is not None


def test_annihilation_budget_exhaustion_is_reported():
    report = oracles.verify_annihilation(max_support=6, max_steps=1)
    assert report.status is OracleStatus.BUDGET_EXHAUSTED


def test_full_profile_passes():
    for r in run_all("full"):
        assert r.status is OracleStatus.PASS, (r.check, r.detail, r.witness)
