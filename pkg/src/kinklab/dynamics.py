"""Exact application of rules 18 and 90 to finite words, cycles and finite-support
configurations.

Words are plain Python strings over {0, 1}.  The hot path packs a word into a
single int and computes a whole step with three shifts and a mask; a scalar
triple-loop reference is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import BadWord, EmptyDiagram, WidthTooSmall, WordTooShort

R18 = "r18"
R90 = "r90"

# Output bit for neighborhood abc at index 4a+2b+c.
RULE18_TABLE = (0, 1, 0, 0, 1, 0, 0, 0)
RULE90_TABLE = (0, 1, 0, 1, 1, 0, 1, 0)

_TABLES = {R18: RULE18_TABLE, R90: RULE90_TABLE}


def check_word(w: str) -> str:
    if w.strip("01"):
        raise BadWord(f"not a binary word: {w!r}")
    return w


def rule18_local(a: int, b: int, c: int) -> int:
    return RULE18_TABLE[4 * a + 2 * b + c]


def rule90_local(a: int, b: int, c: int) -> int:
    return RULE90_TABLE[4 * a + 2 * b + c]


def step_word(w: str, rule: str = R18) -> str:
    """One synchronous step on a finite word; output is 2 symbols shorter.

    Bit-parallel: with the word packed into an int, rule 18 is
    ``~b & (a ^ c)`` on the three shifted lanes, rule 90 is ``a ^ c``.
    """
    n = len(w)
    if n < 3:
        raise WordTooShort(f"cannot step word of length {n} < 3")
    try:
        x = int(w, 2)
    except ValueError:
        raise BadWord(f"not a binary word: {w!r}") from None
    mask = (1 << (n - 2)) - 1
    if rule == R18:
        y = ~(x >> 1) & ((x >> 2) ^ x) & mask
    elif rule == R90:
        y = ((x >> 2) ^ x) & mask
    else:
        raise ValueError(f"unknown rule {rule!r}")
    return format(y, f"0{n - 2}b")


def step_word_scalar(w: str, rule: str = R18) -> str:
    """Naive triple-loop reference used to cross-check the bit-parallel path."""
    check_word(w)
    if len(w) < 3:
        raise WordTooShort(f"cannot step word of length {len(w)} < 3")
    table = _TABLES[rule]
    bits = [int(ch) for ch in w]
    return "".join(
        str(table[4 * bits[i] + 2 * bits[i + 1] + bits[i + 2]])
        for i in range(len(w) - 2)
    )


def iterate_word(w: str, n: int, rule: str = R18) -> str:
    if n < 0:
        raise ValueError("step count must be non-negative")
    if n == 0:
        return check_word(w)
    if len(w) < 2 * n + 1:
        raise WordTooShort(f"length {len(w)} word cannot survive {n} steps")
    for _ in range(n):
        w = step_word(w, rule)
    return w


@dataclass(frozen=True)
class CyclicConfig:
    """Fixed-width periodic configuration; indexing is modulo the width."""

    bits: str

    def __post_init__(self) -> None:
        check_word(self.bits)
        if len(self.bits) < 3:
            raise WidthTooSmall(f"cyclic width {len(self.bits)} < 3")

    @property
    def width(self) -> int:
        return len(self.bits)


def step_cyclic(x: CyclicConfig, rule: str = R18) -> CyclicConfig:
    wrapped = x.bits[-1] + x.bits + x.bits[0]
    return CyclicConfig(step_word(wrapped, rule))


@dataclass(frozen=True)
class FiniteSupportConfig:
    """Bi-infinite configuration with 0-background and finite support.

    The support is trimmed to canonical form (begins and ends with 1, or is
    empty); the offset is the coordinate of the support's leftmost symbol.
    """

    support: str = ""
    offset: int = 0

    def __post_init__(self) -> None:
        check_word(self.support)
        s = self.support
        if "1" not in s:
            object.__setattr__(self, "support", "")
            object.__setattr__(self, "offset", 0)
            return
        lead = s.index("1")
        trail = s.rindex("1")
        object.__setattr__(self, "support", s[lead : trail + 1])
        object.__setattr__(self, "offset", self.offset + lead)

    def symbol(self, i: int) -> int:
        j = i - self.offset
        if 0 <= j < len(self.support):
            return int(self.support[j])
        return 0


def step_support(x: FiniteSupportConfig, rule: str = R18) -> FiniteSupportConfig:
    """Step the whole bi-infinite configuration.

    Padding the support with two background zeros on each side and stepping it
    as a word is exact, since both rules map neighborhood 000 to 0.
    """
    if not x.support:
        return x
    stepped = step_word("00" + x.support + "00", rule)
    return FiniteSupportConfig(stepped, x.offset - 1)


class Geometry(Enum):
    SHRINKING_WORD = "shrinking-word"
    CYCLIC = "cyclic"
    PADDED_SUPPORT = "padded-support"


@dataclass(frozen=True)
class SpacetimeDiagram:
    """One row per time step, top to bottom."""

    rows: tuple[str, ...]
    geometry: Geometry = Geometry.SHRINKING_WORD


def spacetime_word(w: str, steps: int, rule: str = R18) -> SpacetimeDiagram:
    rows = [check_word(w)]
    for _ in range(steps):
        w = step_word(w, rule)
        rows.append(w)
    return SpacetimeDiagram(tuple(rows), Geometry.SHRINKING_WORD)


def spacetime_cyclic(x: CyclicConfig, steps: int, rule: str = R18) -> SpacetimeDiagram:
    rows = [x.bits]
    for _ in range(steps):
        x = step_cyclic(x, rule)
        rows.append(x.bits)
    return SpacetimeDiagram(tuple(rows), Geometry.CYCLIC)


def spacetime_support(
    x: FiniteSupportConfig, steps: int, rule: str = R18
) -> SpacetimeDiagram:
    """Render a finite-support run on a fixed window covering the light cone."""
    configs = [x]
    for _ in range(steps):
        configs.append(step_support(configs[-1], rule))
    nonempty = [c for c in configs if c.support]
    if not nonempty:
        left, right = 0, 1
    else:
        left = min(c.offset for c in nonempty)
        right = max(c.offset + len(c.support) for c in nonempty)
    rows = tuple(
        "".join(str(c.symbol(i)) for i in range(left, right)) for c in configs
    )
    return SpacetimeDiagram(rows, Geometry.PADDED_SUPPORT)


def render_spacetime(diagram: SpacetimeDiagram, format: str = "ascii") -> bytes:
    """ASCII uses '.'/'#' per cell, one row per line; pbm emits a P1 bitmap.

    In shrinking-word geometry the pbm rows are centered (t cells of background
    on each side at step t) so the light cone lines up; ASCII rows are emitted
    as-is.
    """
    if not diagram.rows:
        raise EmptyDiagram("diagram has no rows")
    if format == "ascii":
        table = str.maketrans("01", ".#")
        return "".join(row.translate(table) + "\n" for row in diagram.rows).encode()
    if format == "pbm":
        width = max(len(row) for row in diagram.rows)
        lines = [f"P1\n{width} {len(diagram.rows)}\n"]
        for row in diagram.rows:
            pad = width - len(row)
            left = pad // 2
            cells = "0" * left + row + "0" * (pad - left)
            lines.append(" ".join(cells) + "\n")
        return "".join(lines).encode()
    raise ValueError(f"unknown render format {format!r}")
