"""Kink detection and decomposition.

A kink is an occurrence of 1 0^{2k} 1; its position is the index of its left
border (the leftmost 1).  Occurrences at distinct positions are distinct kinks
even when they share a 1-symbol: 111 holds two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .dynamics import CyclicConfig, check_word
from .errors import NotTwoKink


class KinkOccurrence(NamedTuple):
    position: int
    gap: int


def find_kinks(w: str) -> list[KinkOccurrence]:
    """All kink occurrences, sorted by position, in a single left-to-right scan.

    Only consecutive 1-symbols can bound a kink, and the gap between ones at
    positions p < q is even exactly when q - p is odd.
    """
    check_word(w)
    out: list[KinkOccurrence] = []
    prev = -1
    for i, ch in enumerate(w):
        if ch == "1":
            if prev >= 0 and (i - prev) % 2 == 1:
                out.append(KinkOccurrence(prev, i - prev - 1))
            prev = i
    return out


def count_kinks(w: str) -> int:
    return len(find_kinks(w))


def kink_parity(w: str) -> int:
    return count_kinks(w) % 2


def count_kinks_cyclic(x: CyclicConfig) -> int:
    """Kink occurrences read cyclically; the gap is capped at width - 2 so a
    kink never wraps past its own left border."""
    width = x.width
    ones = [i for i, ch in enumerate(x.bits) if ch == "1"]
    if not ones:
        return 0
    count = 0
    for j, p in enumerate(ones):
        q = ones[(j + 1) % len(ones)]
        gap = (q - p - 1) % width
        if gap % 2 == 0 and gap <= width - 2:
            count += 1
    return count


@dataclass(frozen=True)
class TwoKinkDecomposition:
    b: str
    delta: str
    left_gap: int
    right_gap: int
    b_start: int
    overlapping: bool  # b = 1 0^{2k} 1 0^{2l} 1 with the middle 1 shared


def two_kink_decompose(w: str) -> TwoKinkDecomposition:
    """Smallest subword containing both kinks, plus the separator between them."""
    occ = find_kinks(w)
    if len(occ) != 2:
        raise NotTwoKink(f"expected exactly 2 kinks, found {len(occ)} in {w!r}")
    (p1, g1), (p2, g2) = occ
    end = p2 + g2 + 2
    b = w[p1:end]
    overlapping = p2 == p1 + g1 + 1
    delta = "" if overlapping else w[p1 + g1 + 2 : p2]
    return TwoKinkDecomposition(b, delta, g1, g2, p1, overlapping)
