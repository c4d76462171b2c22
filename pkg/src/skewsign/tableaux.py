"""Partial and standard skew tableaux: reading words, signs, enumeration, imbalance."""
from __future__ import annotations

import types
from functools import lru_cache, total_ordering
from typing import Iterator, Mapping, Sequence

from .shapes import Cell, SkewShape


class InvalidTableauError(ValueError):
    """An entry assignment violates the tableau conditions."""


@total_ordering
class Eps:
    """A placeholder entry ordered below every plain integer.

    Placeholders compare among themselves by their carried value; any
    placeholder compares below any int. Used by the insertion engine to
    seed Q-tableaux, one placeholder per pending internal insertion.
    """

    def __init__(self, value: int):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ValueError(f"placeholder value must be a positive integer: {value!r}")
        self.value = value

    def __eq__(self, other) -> bool:
        return isinstance(other, Eps) and self.value == other.value

    def __lt__(self, other) -> bool:
        if isinstance(other, Eps):
            return self.value < other.value
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("eps", self.value))

    def __repr__(self) -> str:
        return f"Eps({self.value})"


Entry = int | Eps


def _is_entry(value) -> bool:
    if isinstance(value, Eps):
        return True
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


class Tableau:
    """Entries on exactly the cells of a skew shape, strictly increasing
    along rows (left to right) and columns (top to bottom).

    Instances are immutable values; ``entries`` is a read-only mapping.
    """

    def __init__(self, shape: SkewShape, entries: Mapping[Cell, Entry]):
        cells = shape.cells()
        normalized: dict[Cell, Entry] = {}
        for cell, value in entries.items():
            if not _is_entry(value):
                raise InvalidTableauError(f"invalid entry {value!r} at {tuple(cell)}")
            normalized[Cell(*cell)] = value
        if set(normalized) != set(cells):
            missing = set(cells) - set(normalized)
            extra = set(normalized) - set(cells)
            raise InvalidTableauError(
                f"entry cells do not match shape {shape}: missing {sorted(missing)}, extra {sorted(extra)}"
            )
        if len(set(normalized.values())) != len(normalized):
            raise InvalidTableauError("entries are not distinct")
        inner, outer = shape.inner, shape.outer
        for r, c in cells:
            value = normalized[Cell(r, c)]
            if c - 1 > inner.part(r) and not normalized[Cell(r, c - 1)] < value:
                raise InvalidTableauError(f"row not strictly increasing at {(r, c)}")
            if r > 1 and inner.part(r - 1) < c <= outer.part(r - 1):
                if not normalized[Cell(r - 1, c)] < value:
                    raise InvalidTableauError(f"column not strictly increasing at {(r, c)}")
        self.shape = shape
        self._entries = normalized

    @property
    def entries(self) -> Mapping[Cell, Entry]:
        return types.MappingProxyType(self._entries)

    @property
    def size(self) -> int:
        return len(self._entries)

    def entry(self, cell: Cell) -> Entry:
        return self._entries[Cell(*cell)]

    def is_standard(self) -> bool:
        """True iff the entries are exactly the plain integers 1..size."""
        values = set(self._entries.values())
        return values == set(range(1, self.size + 1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        items = ", ".join(f"{tuple(c)}:{v!r}" for c, v in sorted(self._entries.items()))
        return f"Tableau({self.shape}, {{{items}}})"


def reading_word(t: Tableau) -> tuple:
    """Entries read row by row, left to right, top to bottom."""
    return tuple(t.entry(cell) for cell in t.shape.cells())


def inversions(word: Sequence) -> int:
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[j] < word[i]
    )


def word_sign(word: Sequence) -> int:
    """Parity of inversions: +1 for even, -1 for odd."""
    return -1 if inversions(word) % 2 else 1


def word_invsign(word: Sequence) -> int:
    """Parity of non-inversions (pairs in increasing order)."""
    k = len(word)
    non_inversions = k * (k - 1) // 2 - inversions(word)
    return -1 if non_inversions % 2 else 1


def tableau_sign(t: Tableau) -> int:
    return word_sign(reading_word(t))


def tableau_invsign(t: Tableau) -> int:
    return word_invsign(reading_word(t))


def enumerate_standard_tableaux(shape: SkewShape) -> Iterator[Tableau]:
    """All standard tableaux of the shape, generated by backtracking.

    Values 1..n are placed in order; candidate cells are tried row-major,
    so the output order is deterministic.
    """
    cells = shape.cells()
    n = len(cells)
    inner, outer = shape.inner, shape.outer
    filled: dict[Cell, int] = {}

    def addable(cell: Cell) -> bool:
        r, c = cell
        if c - 1 > inner.part(r) and Cell(r, c - 1) not in filled:
            return False
        if r > 1 and inner.part(r - 1) < c <= outer.part(r - 1) and Cell(r - 1, c) not in filled:
            return False
        return True

    def place(value: int) -> Iterator[Tableau]:
        if value > n:
            yield Tableau(shape, dict(filled))
            return
        for cell in cells:
            if cell not in filled and addable(cell):
                filled[cell] = value
                yield from place(value + 1)
                del filled[cell]

    yield from place(1)


@lru_cache(maxsize=None)
def _count_standard(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    if sum(outer) == sum(inner):
        return 1
    total = 0
    for r in range(len(outer)):
        width = outer[r]
        below = outer[r + 1] if r + 1 < len(outer) else 0
        within = inner[r] if r < len(inner) else 0
        if width > below and width > within:
            child = outer[:r] + (width - 1,) + outer[r + 1 :]
            while child and child[-1] == 0:
                child = child[:-1]
            total += _count_standard(child, inner)
    return total


def count_standard_tableaux(shape: SkewShape) -> int:
    """Number of standard tableaux, by memoized corner-removal recursion."""
    return _count_standard(shape.outer.parts, shape.inner.parts)


def imbalance(shape: SkewShape) -> int:
    """Sum of the signs of all standard tableaux of the shape."""
    return sum(tableau_sign(t) for t in enumerate_standard_tableaux(shape))


def is_chess_tableau(t: Tableau) -> bool:
    """True iff odd entries sit at even Manhattan distance from (1,1).

    For skew shapes the origin is taken to be position (1,1) of the outer
    shape, so the parity class of a cell is (row + col) mod 2.
    """
    if not t.is_standard():
        raise InvalidTableauError("chess predicate requires a standard tableau")
    return all(
        (value % 2 == 1) == ((cell.row + cell.col) % 2 == 0)
        for cell, value in t.entries.items()
    )


def standardize(t: Tableau) -> Tableau:
    """Replace each entry by its rank among all entries, keeping the shape."""
    for value in t.entries.values():
        if isinstance(value, Eps):
            raise InvalidTableauError("cannot standardize placeholder entries")
    order = sorted(t.entries.values())
    rank = {value: i + 1 for i, value in enumerate(order)}
    return Tableau(t.shape, {cell: rank[value] for cell, value in t.entries.items()})


def relabel(t: Tableau, values: Sequence[int]) -> Tableau:
    """Replace entry i by values[i-1]; inverse of standardize for sorted values."""
    if not t.is_standard():
        raise InvalidTableauError("relabel requires a standard tableau")
    if len(values) != t.size:
        raise InvalidTableauError(f"need {t.size} values, got {len(values)}")
    if any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
        raise InvalidTableauError("relabel values must be strictly increasing")
    return Tableau(t.shape, {cell: values[v - 1] for cell, v in t.entries.items()})
