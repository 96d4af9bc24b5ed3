"""Bounded-scale mechanical verification of the concrete computations behind
the kink-dynamics theory.

Every oracle reduces to the stepping and preimage primitives only and never
consults another oracle's conclusion.  BudgetExhausted is distinct from Fail:
the underlying claims quantify over infinite families, so a bounded search can
refute but only ever confirm within its budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Any, Callable

from . import dynamics, kinks, preimage, wordclasses
from .dynamics import FiniteSupportConfig, CyclicConfig


class OracleStatus(Enum):
    PASS = "Pass"
    FAIL = "Fail"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class OracleReport:
    check: str
    status: OracleStatus
    budget: dict[str, Any]
    witness: str | None = None
    detail: str | None = None

    def to_json(self) -> str:
        payload: dict[str, Any] = {
            "check": self.check,
            "status": self.status.value,
            "budget": self.budget,
        }
        if self.witness is not None:
            payload["witness"] = self.witness
        if self.detail is not None:
            payload["detail"] = self.detail
        return json.dumps(payload, sort_keys=True)


def _fail(check: str, budget: dict, witness: str, detail: str) -> OracleReport:
    return OracleReport(check, OracleStatus.FAIL, budget, witness, detail)


def _ok(check: str, budget: dict, detail: str | None = None) -> OracleReport:
    return OracleReport(check, OracleStatus.PASS, budget, None, detail)


# ---------------------------------------------------------------------------
# explicit iterates from the worked figures

FIGURE_ITERATES = (
    ("0010101100101", 3, "1001011"),
    ("1010010110100", 3, "1101001"),
    ("00101100001", 2, "1001011"),
    ("00001011000110101000100", 8, "1101001"),
)


def verify_figure_iterates() -> OracleReport:
    """Each figure's n-step image is exact and every word strictly before the
    final step is stable."""
    budget = {"figures": len(FIGURE_ITERATES)}
    for start, steps, expected in FIGURE_ITERATES:
        w = start
        for t in range(steps):
            if not wordclasses.is_stable(w):
                return _fail(
                    "figure_iterates", budget, w,
                    f"intermediate f^{t}({start}) is unstable",
                )
            w = dynamics.step_word(w)
        if w != expected:
            return _fail(
                "figure_iterates", budget, w,
                f"f^{steps}({start}) = {w}, expected {expected}",
            )
    return _ok("figure_iterates", budget)


def _no_double_zero_words(max_len: int):
    """All words of length <= max_len avoiding the factor 00 (incl. empty)."""
    frontier = [""]
    while frontier:
        w = frontier.pop()
        yield w
        if len(w) < max_len:
            frontier.append(w + "1")
            if not w.endswith("0"):
                frontier.append(w + "0")


def verify_kink_elimination_parity(max_len: int = 16) -> OracleReport:
    """For u = 001 w 100 with 00-free w: one step collapses u to a single
    even-or-odd gap 1 0^{|w|+2} 1, a kink exactly when u held an odd number."""
    budget = {"max_len": max_len}
    for w in _no_double_zero_words(max_len - 6):
        u = "001" + w + "100"
        image = dynamics.step_word(u)
        expected = "1" + "0" * (len(w) + 2) + "1"
        if image != expected:
            return _fail(
                "kink_elimination_parity", budget, u,
                f"step({u}) = {image}, expected {expected}",
            )
        image_is_kink = len(w) % 2 == 0  # gap |w|+2 even
        if image_is_kink != (kinks.count_kinks(u) % 2 == 1):
            return _fail(
                "kink_elimination_parity", budget, u,
                "kink parity of input does not match image gap parity",
            )
    return _ok("kink_elimination_parity", budget)


def verify_annihilation(max_support: int = 12, max_steps: int = 4096) -> OracleReport:
    """Every finite-support configuration reaches at most one kink, with the
    surviving parity equal to the initial parity."""
    budget = {"max_support": max_support, "max_steps": max_steps}
    supports = [""]
    for length in range(1, max_support + 1):
        if length == 1:
            supports.append("1")
        else:
            supports.extend(
                "1" + "".join(m) + "1" for m in product("01", repeat=length - 2)
            )
    for s in supports:
        parity = kinks.count_kinks(s) % 2
        cfg = FiniteSupportConfig(s)
        steps = 0
        while kinks.count_kinks(cfg.support) > 1:
            if steps >= max_steps:
                return OracleReport(
                    "annihilation", OracleStatus.BUDGET_EXHAUSTED, budget, s,
                    f"still {kinks.count_kinks(cfg.support)} kinks after {max_steps} steps",
                )
            cfg = dynamics.step_support(cfg)
            steps += 1
        if kinks.count_kinks(cfg.support) % 2 != parity:
            return _fail(
                "annihilation", budget, s,
                f"kink parity flipped after {steps} steps",
            )
    return _ok("annihilation", budget)


def verify_extension_counterexample() -> OracleReport:
    """101 extends step(0011) = 10 without new kinks, yet no kink-preserving
    extension of 0011 maps onto it: the published permuting claim fails on
    unstable words."""
    budget = {"pads": 1}
    target_family = preimage.enumerate_extensions("10", 1, 1)
    if "101" not in target_family.members:
        return _fail(
            "extension_counterexample", budget, "101",
            "101 is unexpectedly not a kink-preserving extension of 10",
        )
    source_family = preimage.enumerate_extensions("0011", 1, 1)
    for e in sorted(source_family.members):
        if len(e) < 3:
            continue
        fe = dynamics.step_word(e)
        for start in range(len(e) - 3):
            if e[start : start + 4] == "0011" and fe[start : start + 3] == "101":
                return _fail(
                    "extension_counterexample", budget, e,
                    f"found a lift: step({e}) reaches 101",
                )
    return _ok("extension_counterexample", budget)


def verify_preimage_reduction_cases(max_k: int = 8) -> OracleReport:
    """The constructive steps that funnel any left kink word down to 11."""
    budget = {"max_k": max_k}
    for k in range(max_k + 1):
        w3 = "00" + "11" + "01" * k + "0" + "0"
        if dynamics.iterate_word(w3, k + 2) != "11":
            return _fail(
                "preimage_reduction_cases", budget, w3,
                f"f^{k + 2} of padded 11(01)^{k}0 is not 11",
            )
        w4 = "00" + "11" + "01" * k + "00"
        if dynamics.iterate_word(w4, k + 2) != "11":
            return _fail(
                "preimage_reduction_cases", budget, w4,
                f"f^{k + 2} of padded 11(01)^{k} is not 11",
            )
        prefix = "1" + "0" * (2 * (k + 1)) + "1"
        for u_len in range(1, 4):
            for u_bits in product("01", repeat=u_len):
                w5 = "00" + "11" + "01" * k + "00" + "".join(u_bits)
                if not dynamics.step_word(w5).startswith(prefix):
                    return _fail(
                        "preimage_reduction_cases", budget, w5,
                        f"step image does not begin with 1 0^{2 * (k + 1)} 1",
                    )
    return _ok("preimage_reduction_cases", budget)


def _find_mobility_witness(steps: int, shift: int, max_pad: int):
    """Search two-kink extensions of 1101001 whose n-step image holds the
    marker shifted by the given amount (absolute coordinates)."""
    marker = "1101001"
    for total in range(2 * steps, 2 * max_pad + 1):
        for la in range(total + 1):
            lb = total - la
            if la > max_pad or lb > max_pad:
                continue
            # the marker must survive inside the shrunken word
            if la + shift - steps < 0:
                continue
            for a_bits in product("01", repeat=la):
                a = "".join(a_bits)
                for b_bits in product("01", repeat=lb):
                    u = a + marker + "".join(b_bits)
                    if kinks.count_kinks(u) != 2:
                        continue
                    image = dynamics.iterate_word(u, steps)
                    pos = la + shift - steps
                    if image[pos : pos + 7] == marker:
                        return u
    return None


def verify_mobility(max_pad: int = 8) -> OracleReport:
    """1101001 can be walked one cell left in 5 steps and one cell right in 3,
    matching the worked spacetime figures."""
    budget = {"max_pad": max_pad}
    left = _find_mobility_witness(steps=5, shift=-1, max_pad=max_pad)
    if left is None:
        return OracleReport(
            "mobility", OracleStatus.BUDGET_EXHAUSTED, budget, None,
            "no left-move witness within pad budget",
        )
    right = _find_mobility_witness(steps=3, shift=+1, max_pad=max_pad)
    if right is None:
        return OracleReport(
            "mobility", OracleStatus.BUDGET_EXHAUSTED, budget, None,
            "no right-move witness within pad budget",
        )
    return _ok("mobility", budget, f"left via {left}, right via {right}")


def flipflop_violation(u: str, u_prime: str, pad: int) -> str | None:
    """Search for a preimage of a context around u that itself has a preimage
    but does not carry u_prime one cell to the left; returns a witness or None.

    Word index j of a target corresponds to index j+1 of its preimage, so
    "u_prime at coordinate -1 relative to u at p" means preimage index p.
    """
    for la in range(pad + 1):
        for lb in range(pad + 1):
            for x_bits in product("01", repeat=la):
                for y_bits in product("01", repeat=lb):
                    ctx = "".join(x_bits) + u + "".join(y_bits)
                    for v in preimage.preimages(ctx).members:
                        if not preimage.has_preimage(v):
                            continue
                        if v[la : la + len(u_prime)] != u_prime:
                            return v
    return None


def verify_flipflop(max_k: int = 2, pad: int = 2) -> OracleReport:
    """The alternating pair 1(100010)^k 1001 / 1001(010001)^k 1 force each
    other in consecutive twice-steppable preimages."""
    budget = {"max_k": max_k, "pad": pad}
    for k in range(max_k + 1):
        u = "1" + "100010" * k + "1001"
        u_prime = "1001" + "010001" * k + "1"
        witness = flipflop_violation(u, u_prime, pad)
        if witness is not None:
            return _fail(
                "flipflop", budget, witness,
                f"preimage of context around {u} misses {u_prime}",
            )
        # symmetric direction: u one cell to the right of u_prime means
        # preimage index p+2 when u_prime sits at context offset p
        witness = _flipflop_violation_reverse(u_prime, u, pad)
        if witness is not None:
            return _fail(
                "flipflop", budget, witness,
                f"preimage of context around {u_prime} misses {u}",
            )
    return _ok("flipflop", budget)


def _flipflop_violation_reverse(u_prime: str, u: str, pad: int) -> str | None:
    for la in range(pad + 1):
        for lb in range(pad + 1):
            for x_bits in product("01", repeat=la):
                for y_bits in product("01", repeat=lb):
                    ctx = "".join(x_bits) + u_prime + "".join(y_bits)
                    for v in preimage.preimages(ctx).members:
                        if not preimage.has_preimage(v):
                            continue
                        if v[la + 2 : la + 2 + len(u)] != u:
                            return v
    return None


def _two_kink_words_shaped(prefix: str, suffix: str, length: int):
    """Two-kink words of the given length with the given boundary shape; the
    prefix and suffix may overlap."""
    if length < max(len(prefix), len(suffix)):
        return
    template: list[str | None] = [None] * length
    for i, ch in enumerate(prefix):
        template[i] = ch
    for i, ch in enumerate(suffix):
        j = length - len(suffix) + i
        if template[j] is not None and template[j] != ch:
            return
        template[j] = ch
    free = [i for i, t in enumerate(template) if t is None]
    for bits in product("01", repeat=len(free)):
        cells = list(template)
        for i, b in zip(free, bits):
            cells[i] = b
        w = "".join(cells)  # type: ignore[arg-type]
        if kinks.count_kinks(w) == 2:
            yield w


def _backward_survivors(
    length: int,
    prefix: str,
    suffix: str,
    step_back: Callable[[str], str],
) -> set[str]:
    """Iterate the forced-preimage map `length` times, keeping only words that
    stay two-kink words of the given boundary shape throughout."""

    def in_class(w: str) -> bool:
        return (
            w.startswith(prefix)
            and w.endswith(suffix)
            and kinks.count_kinks(w) == 2
        )

    survivors = set()
    for w in _two_kink_words_shaped(prefix, suffix, length):
        cur = w
        alive = True
        for _ in range(length):
            cur = step_back(cur)
            if not in_class(cur):
                alive = False
                break
        if alive:
            survivors.add(w)
    return survivors


def verify_two_kink_backward(max_m: int = 4, max_back_len: int = 17) -> OracleReport:
    """The two-branch double-step constructions for the difficult alternating
    subcase, plus the backward-forcing uniqueness of the flip-flop endpoints."""
    budget = {"max_m": max_m, "max_back_len": max_back_len}
    for m in range(max_m + 1):
        if m % 2 == 0:
            u2 = "001011" + "000000010101" * (m // 2) + "00001"
        else:
            u2 = "1000000" + "101010000000" * ((m - 1) // 2) + "1010100001"
        target = "1001" + "010001" * m + "011"
        image = dynamics.iterate_word(u2, 2)
        if image != target:
            return _fail(
                "two_kink_backward", budget, u2,
                f"f^2 gave {image}, expected {target} (m={m})",
            )

    # endpoint shape A: maps to the reversal of one forward step of 00·w
    def back_a(w: str) -> str:
        return dynamics.step_word("00" + w)[::-1]

    # endpoint shape B: two forward steps of 00·w·00, same length
    def back_b(w: str) -> str:
        return dynamics.iterate_word("00" + w + "00", 2)

    for length in range(5, max_back_len + 1):
        survivors = _backward_survivors(length, "1100", "1001", back_a)
        if (length - 5) % 6 == 0:
            expected = {"1" + "100010" * ((length - 5) // 6) + "1001"}
        else:
            expected = set()
        if survivors != expected:
            return _fail(
                "two_kink_backward", budget,
                ",".join(sorted(survivors)) or "(empty)",
                f"shape-A survivors at length {length} differ from {sorted(expected)}",
            )
    for length in range(6, max_back_len + 1):
        survivors = _backward_survivors(length, "1100", "0011", back_b)
        if (length - 7) % 6 == 0:
            expected = {"11000" + "101000" * ((length - 7) // 6) + "11"}
        else:
            expected = set()
        if survivors != expected:
            return _fail(
                "two_kink_backward", budget,
                ",".join(sorted(survivors)) or "(empty)",
                f"shape-B survivors at length {length} differ from {sorted(expected)}",
            )
    return _ok("two_kink_backward", budget)


def verify_separation() -> OracleReport:
    """The witnesses separating the three limit notions: a period-2 cycle
    containing 10011, its exclusion from the two-kink language, and the double
    kink destruction that starves 001101100 of asymptotic measure."""
    budget = {}
    x = CyclicConfig("1001")
    if dynamics.step_cyclic(dynamics.step_cyclic(x)).bits != "1001":
        return _fail("separation", budget, "1001", "cyclic 1001 is not period-2")
    if wordclasses.in_P("10011"):
        return _fail("separation", budget, "10011", "10011 should not be in P")
    w = "001101100"
    if dynamics.step_word(w) != "1000001":
        return _fail("separation", budget, w, "step(001101100) != 1000001")
    if kinks.count_kinks(w) != 2 or kinks.count_kinks("1000001") != 0:
        return _fail("separation", budget, w, "kink destruction count is not 2 -> 0")
    if not wordclasses.in_P(w):
        return _fail("separation", budget, w, "001101100 should be in P")
    return _ok("separation", budget)


PROFILES: dict[str, dict[str, dict]] = {
    "quick": {
        "figure_iterates": {},
        "kink_elimination_parity": {"max_len": 12},
        "annihilation": {"max_support": 9, "max_steps": 2048},
        "extension_counterexample": {},
        "preimage_reduction_cases": {"max_k": 4},
        "mobility": {"max_pad": 8},
        "flipflop": {"max_k": 1, "pad": 1},
        "two_kink_backward": {"max_m": 2, "max_back_len": 13},
        "separation": {},
    },
    "full": {
        "figure_iterates": {},
        "kink_elimination_parity": {"max_len": 16},
        "annihilation": {"max_support": 12, "max_steps": 4096},
        "extension_counterexample": {},
        "preimage_reduction_cases": {"max_k": 8},
        "mobility": {"max_pad": 8},
        "flipflop": {"max_k": 2, "pad": 2},
        "two_kink_backward": {"max_m": 4, "max_back_len": 17},
        "separation": {},
    },
}

_ORACLES: dict[str, Callable[..., OracleReport]] = {
    "figure_iterates": verify_figure_iterates,
    "kink_elimination_parity": verify_kink_elimination_parity,
    "annihilation": verify_annihilation,
    "extension_counterexample": verify_extension_counterexample,
    "preimage_reduction_cases": verify_preimage_reduction_cases,
    "mobility": verify_mobility,
    "flipflop": verify_flipflop,
    "two_kink_backward": verify_two_kink_backward,
    "separation": verify_separation,
}


def run_all(budget: str = "quick") -> list[OracleReport]:
    """Run every oracle with profile-scaled bounds, sorted by check name."""
    if budget not in PROFILES:
        raise ValueError(f"unknown profile {budget!r}; choose from {sorted(PROFILES)}")
    reports = [
        _ORACLES[name](**kwargs) for name, kwargs in PROFILES[budget].items()
    ]
    return sorted(reports, key=lambda r: r.check)
