"""Membership tests for the word classes governing kink dynamics.

Stability is decided by two hand-compiled DFAs for the regular languages
(e+0)(10)*11(0+1)* (left unstable) and its mirror (0+1)*11(01)*(e+0)
(right unstable).  A word is stable when neither accepts.
"""

from __future__ import annotations

from enum import Enum

from .dynamics import check_word
from .errors import NotTwoKink
from .kinks import count_kinks, find_kinks, two_kink_decompose


class StabilityClass(Enum):
    STABLE = "Stable"
    LEFT_UNSTABLE = "LeftUnstable"
    RIGHT_UNSTABLE = "RightUnstable"
    BOTH_UNSTABLE = "BothUnstable"


# DFA for (e+0)(10)*11(0+1)*.
# States: 0 start, 1 expecting the 1 of a "10" block (or of "11"),
#         2 just read that 1, 3 accept sink, 4 dead.
_LU_TRANS = {
    (0, "0"): 1,
    (0, "1"): 2,
    (1, "0"): 4,
    (1, "1"): 2,
    (2, "0"): 1,
    (2, "1"): 3,
    (3, "0"): 3,
    (3, "1"): 3,
    (4, "0"): 4,
    (4, "1"): 4,
}
_LU_ACCEPT = {3}


def is_left_unstable(w: str) -> bool:
    check_word(w)
    state = 0
    for ch in w:
        state = _LU_TRANS[(state, ch)]
        if state == 4:
            return False
    return state in _LU_ACCEPT


def is_right_unstable(w: str) -> bool:
    # The right-unstable language is the reversal of the left-unstable one.
    return is_left_unstable(w[::-1])


def classify_stability(w: str) -> StabilityClass:
    left = is_left_unstable(w)
    right = is_right_unstable(w)
    if left and right:
        return StabilityClass.BOTH_UNSTABLE
    if left:
        return StabilityClass.LEFT_UNSTABLE
    if right:
        return StabilityClass.RIGHT_UNSTABLE
    return StabilityClass.STABLE


def is_stable(w: str) -> bool:
    return classify_stability(w) is StabilityClass.STABLE


def reverse(w: str) -> str:
    return check_word(w)[::-1]


def is_left_kink_word(w: str) -> bool:
    """Begins with a kink and contains no other kink."""
    occ = find_kinks(w)
    return len(occ) == 1 and occ[0].position == 0


def _is_alternating_b_exclusion(w: str) -> bool:
    # The excluded shapes 11 (01)^k 1.
    if len(w) < 3 or len(w) % 2 == 0:
        return False
    k = (len(w) - 3) // 2
    return w == "11" + "01" * k + "1"


def in_B(w: str) -> bool:
    """Two-kink words that begin with 11 and end with a kink (the terminal kink
    may overlap the prefix), excluding the alternating shapes 11(01)^k 1."""
    check_word(w)
    occ = find_kinks(w)
    if len(occ) != 2 or not w.startswith("11"):
        return False
    if not any(p + g + 1 == len(w) - 1 for p, g in occ):
        return False
    return not _is_alternating_b_exclusion(w)


def in_B_reversed(w: str) -> bool:
    return in_B(reverse(w))


def _is_flipflop_shape(b: str) -> bool:
    # 1 (100010)^k 1001 or 1001 (010001)^k 1 for some k >= 0.
    if (len(b) - 5) % 6 != 0 or len(b) < 5:
        return False
    k = (len(b) - 5) // 6
    return b == "1" + "100010" * k + "1001" or b == "1001" + "010001" * k + "1"


def in_P(w: str) -> bool:
    """The two-kink words occurring in the generic limit set.

    Precondition: w has exactly two kinks (NotTwoKink otherwise); the
    characterization only quantifies over two-kink words.
    """
    if count_kinks(w) != 2:
        raise NotTwoKink(f"membership in P is defined for two-kink words: {w!r}")
    d = two_kink_decompose(w)
    if d.b == "111":
        return False
    if d.left_gap == 0 and d.right_gap == 0 and not d.overlapping:
        # b = 11 v 11: the separator must hold an even number of 1s.
        if d.delta.count("1") % 2 == 1:
            return False
    return not _is_flipflop_shape(d.b)
