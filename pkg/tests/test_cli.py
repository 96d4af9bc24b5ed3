import json

import pytest

from kinklab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_simulate_word(capsys):
    code, out, _ = run(capsys, "simulate", "--word", "0010101100101", "--steps", "3")
    assert code == 0
    assert out.strip() == "1001011"


def test_simulate_rule90(capsys):
    code, out, _ = run(capsys, "simulate", "--word", "1001", "--rule", "r90")
    assert code == 0
    assert out.strip() == "11"


def test_simulate_cyclic(capsys):
    code, out, _ = run(capsys, "simulate", "--cyclic", "1001", "--steps", "2")
    assert code == 0
    assert out.strip() == "1001"


def test_simulate_support(capsys):
    code, out, _ = run(
        capsys, "simulate", "--support", "1", "--offset", "0", "--steps", "1"
    )
    assert code == 0
    assert out.strip() == "101 @ -1"


def test_simulate_render_ascii(capsys):
    code, out, _ = run(
        capsys, "simulate", "--cyclic", "1001", "--steps", "1", "--render", "ascii"
    )
    assert code == 0
    assert out.startswith("#..#\n.##.\n")


def test_classify_two_kink(capsys):
    code, out, _ = run(capsys, "classify", "1101001")
    assert code == 0
    payload = json.loads(out)
    assert payload["kinks"] == 2
    assert payload["occurrences"] == [[0, 0], [3, 2]]
    assert payload["inP"] is True
    assert payload["b"] == "1101001"


def test_classify_stable(capsys):
    code, out, _ = run(capsys, "classify", "001101100")
    assert code == 0
    payload = json.loads(out)
    assert payload["stability"] == "Stable"
    assert payload["inP"] is True


def test_classify_kinkless(capsys):
    code, out, _ = run(capsys, "classify", "10101")
    assert code == 0
    payload = json.loads(out)
    assert payload["kinks"] == 0
    assert "inP" not in payload


def test_preimage_enumeration(capsys):
    code, out, _ = run(capsys, "preimage", "11")
    assert code == 0
    assert json.loads(out) == ["1001"]


def test_preimage_depth(capsys):
    code, out, _ = run(capsys, "preimage", "111", "--depth", "1")
    assert code == 0
    assert json.loads(out) == []
    code, out, _ = run(capsys, "preimage", "11", "--depth", "2")
    assert code == 0
    assert json.loads(out) is True


def test_verify_quick(capsys):
    code, out, _ = run(capsys, "verify", "--profile", "quick")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    for line in lines:
        assert json.loads(line)["status"] == "Pass"


def test_verify_failure_exit_code(capsys, monkeypatch):
    from kinklab import oracles

    def broken():
        return oracles.OracleReport(
            "figure_iterates", oracles.OracleStatus.FAIL, {}, "w", "forced"
        )

    monkeypatch.setitem(oracles._ORACLES, "figure_iterates", broken)
    code, out, _ = run(capsys, "verify", "--profile", "quick")
    assert code == 1


def test_density_outputs(capsys, tmp_path):
    prefix = str(tmp_path / "run")
    code, out, _ = run(
        capsys,
        "density",
        "--width", "131",
        "--steps", "64",
        "--trials", "4",
        "--seed", "7",
        "--out", prefix,
        "--window", "8", "57",
    )
    assert code == 0
    assert (tmp_path / "run.csv").exists()
    meta = json.loads((tmp_path / "run.json").read_text())
    assert meta["fit"]["window"] == [8, 57]
    assert "d_0 = " in out


@pytest.mark.parametrize(
    "argv",
    [
        ("simulate", "--word", "01"),       # too short to step
        ("simulate", "--word", "012"),      # non-binary
        ("classify", "0a1"),                # non-binary
        ("preimage", "11", "--depth", "0"),  # bad depth
        ("density", "--width", "4", "--steps", "64"),  # width below floor
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_unknown_command_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()
