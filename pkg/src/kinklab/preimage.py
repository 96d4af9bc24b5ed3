"""Preimage enumeration under rule 18 and kink-preserving extension families.

Preimages are computed by dynamic programming over the two-symbol overlap
between consecutive neighborhoods; extension families are honest finite
truncations with explicit pad bounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from . import dynamics, kinks, wordclasses
from .dynamics import check_word, step_word
from .errors import (
    BadShape,
    ExcludedForm,
    NoLift,
    NonUnique,
    NotStable,
    PadTooLarge,
    WordTooShort,
)
from .kinks import count_kinks

MAX_PAD = 8

_EXCLUDED_FORM_RE = re.compile(r"0?(10)*1?")


@dataclass(frozen=True)
class PreimageSet:
    target: str
    members: tuple[str, ...]

    def __contains__(self, u: str) -> bool:
        return u in self.members

    def __len__(self) -> int:
        return len(self.members)


def _reach_table(w: str) -> list[list[bool]]:
    """reach[i][s] = the 2-bit overlap state s at layer i can complete w[i:]."""
    n = len(w)
    target = [int(ch) for ch in w]
    reach = [[False] * 4 for _ in range(n + 1)]
    reach[n] = [True] * 4
    for i in range(n - 1, -1, -1):
        for s in range(4):
            s1, s2 = s >> 1, s & 1
            for c in (0, 1):
                if (
                    dynamics.rule18_local(s1, s2, c) == target[i]
                    and reach[i + 1][(s2 << 1) | c]
                ):
                    reach[i][s] = True
                    break
    return reach


def preimages(w: str) -> PreimageSet:
    """All u of length |w|+2 with step_word(u) = w, in lexicographic order."""
    check_word(w)
    if not w:
        raise WordTooShort("preimages need a nonempty target")
    n = len(w)
    target = [int(ch) for ch in w]
    reach = _reach_table(w)
    members: list[str] = []
    stack: list[tuple[int, int, str]] = [
        (0, s, format(s, "02b")) for s in range(3, -1, -1) if reach[0][s]
    ]
    while stack:
        i, s, prefix = stack.pop()
        if i == n:
            members.append(prefix)
            continue
        s1, s2 = s >> 1, s & 1
        for c in (1, 0):
            if dynamics.rule18_local(s1, s2, c) == target[i]:
                ns = (s2 << 1) | c
                if reach[i + 1][ns]:
                    stack.append((i + 1, ns, prefix + str(c)))
    return PreimageSet(w, tuple(sorted(members)))


def has_preimage(w: str) -> bool:
    """Existence-only variant of preimages(), O(|w|)."""
    check_word(w)
    if not w:
        raise WordTooShort("preimages need a nonempty target")
    return any(_reach_table(w)[0])


def preimage_depth(w: str, d: int) -> bool:
    """True iff a preimage chain of length d above w exists."""
    if d < 0:
        raise ValueError("depth must be non-negative")
    frontier = {check_word(w)}
    for _ in range(d):
        frontier = {u for v in frontier for u in preimages(v).members}
        if not frontier:
            return False
    return True


@dataclass(frozen=True)
class ExtensionFamily:
    """Finite truncation of the kink-preserving extension set of a base word."""

    base: str
    left_pad: int
    right_pad: int
    members: frozenset[str]


def _all_words(max_len: int):
    for length in range(max_len + 1):
        for bits in product("01", repeat=length):
            yield "".join(bits)


def enumerate_extensions(
    w: str, left_pad: int, right_pad: int, max_pad: int = MAX_PAD
) -> ExtensionFamily:
    check_word(w)
    if left_pad > max_pad or right_pad > max_pad:
        raise PadTooLarge(f"pads {(left_pad, right_pad)} exceed bound {max_pad}")
    m = count_kinks(w)
    members = frozenset(
        a + w + b
        for a in _all_words(left_pad)
        for b in _all_words(right_pad)
        if count_kinks(a + w + b) == m
    )
    return ExtensionFamily(w, left_pad, right_pad, members)


def is_excluded_form(w: str) -> bool:
    """Shapes 0^a (10)^n 1^b with a, b in {0, 1}, on which lifting is only
    determined up to parity."""
    return bool(_EXCLUDED_FORM_RE.fullmatch(w))


@dataclass(frozen=True)
class StableExtensionReport:
    word: str
    pad: int
    inclusion_holds: bool
    equality_holds: bool
    excluded_form: bool
    counterexamples: tuple[str, ...] = ()


def check_stable_extension(w: str, pad: int) -> StableExtensionReport:
    """Bounded check that stepping maps the extension family of w into (and
    onto) the extension family of step_word(w).

    Equality is only probed for extensions representable within the pad
    budget; the report carries the budget so an inconclusive result is
    distinguishable from a refutation.
    """
    if len(w) < 3:
        raise WordTooShort(f"need |w| >= 3, got {len(w)}")
    fw = step_word(w)
    m_w = count_kinks(w)
    m_fw = count_kinks(fw)
    excluded = is_excluded_form(w)
    alpha = 1 if w.startswith("0") else 0
    bad: list[str] = []

    inclusion = True
    family = enumerate_extensions(w, pad, pad)
    for e in sorted(family.members):
        fe = step_word(e)
        # step_word(e) must keep the kink count of step_word(w) and contain it
        # at the offset of some occurrence of w in e
        ok = count_kinks(fe) == m_fw and any(
            e[start : start + len(w)] == w and fe[start : start + len(fw)] == fw
            for start in range(len(e) - len(w) + 1)
        )
        if not ok:
            inclusion = False
            bad.append(e)

    equality = True
    for la in range(pad + 1):
        for lb in range(pad + 1):
            for a_bits in product("01", repeat=la):
                a = "".join(a_bits)
                for b_bits in product("01", repeat=lb):
                    b = "".join(b_bits)
                    u = a + fw + b
                    if count_kinks(u) != m_fw:
                        continue
                    if excluded and any(
                        u[i] == "1"
                        for i in range(len(u))
                        if (i - la - alpha) % 2 != 0
                    ):
                        continue  # equality is only claimed up to parity
                    if not _has_lift(w, m_w, u, la, lb):
                        equality = False
                        bad.append(u)
    return StableExtensionReport(
        word=w,
        pad=pad,
        inclusion_holds=inclusion,
        equality_holds=equality,
        excluded_form=excluded,
        counterexamples=tuple(bad),
    )


def _has_lift(w: str, m_w: int, u: str, la: int, lb: int) -> bool:
    for a_bits in product("01", repeat=la):
        for b_bits in product("01", repeat=lb):
            e = "".join(a_bits) + w + "".join(b_bits)
            if count_kinks(e) == m_w and step_word(e) == u:
                return True
    return False


def _image_or_empty(w: str) -> str:
    return "" if len(w) == 2 else step_word(w)


def unique_lift(w: str, a: str, b: str) -> str:
    """The unique a', b' with step_word(a' w b') = a·step_word(w)·b.

    NoLift and NonUnique are distinct failures: the former falsifies the
    existence half of the uniqueness guarantee, the latter its uniqueness half
    (or the implementation).
    """
    check_word(a), check_word(b)
    if len(w) < 2:
        raise WordTooShort("unique_lift needs |w| >= 2")
    if not wordclasses.is_stable(w):
        raise NotStable(f"{w!r} is unstable")
    if is_excluded_form(w):
        raise ExcludedForm(f"{w!r} is of the excluded alternating form")
    fw = _image_or_empty(w)
    u = a + fw + b
    if count_kinks(u) != count_kinks(fw):
        raise ValueError(f"{u!r} is not a kink-preserving extension of {fw!r}")
    if not a and not b:
        return w
    # uniqueness holds within the kink-preserving extension family of w;
    # lifts that introduce extra kinks are out of scope
    m_w = count_kinks(w)
    found: list[str] = []
    for a_bits in product("01", repeat=len(a)):
        for b_bits in product("01", repeat=len(b)):
            e = "".join(a_bits) + w + "".join(b_bits)
            if count_kinks(e) == m_w and step_word(e) == u:
                found.append(e)
    if not found:
        raise NoLift(f"no lift of {u!r} through {w!r}")
    if len(found) > 1:
        raise NonUnique(f"multiple lifts of {u!r} through {w!r}: {found}")
    return found[0]


def two_kink_preimage(w: str) -> str:
    """The unique two-kink preimage of a two-kink word 11 v 11 whose separator
    v holds an even number of 1s, built from the closed-form shape and verified
    by stepping before it is returned."""
    check_word(w)
    if len(w) < 5 or not (w.startswith("11") and w.endswith("11")):
        raise BadShape(f"{w!r} is not of the form 11 v 11")
    if count_kinks(w) != 2:
        raise BadShape(f"{w!r} does not have exactly two kinks")
    v = w[2:-2]
    if v.count("1") % 2 == 1:
        raise BadShape(f"separator of {w!r} has an odd number of 1s: no preimage")
    runs = v.split("1")
    if any(len(r) % 2 == 0 for r in runs):
        raise BadShape(f"{w!r} separator zero-runs must all have odd length")
    parts = ["100"]
    for j, r in enumerate(runs):
        n_j = (len(r) + 1) // 2
        parts.append("10" * n_j if j % 2 == 0 else "00" * n_j)
    parts.append("01")
    result = "".join(parts)
    if step_word(result) != w or count_kinks(result) != 2:
        raise BadShape(f"internal error: formula preimage of {w!r} failed to verify")
    return result
