"""Integer partitions, skew shapes, and their packing statistics."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class InvalidShapeError(ValueError):
    """A sequence of parts does not describe a valid (skew) shape."""


class Cell(NamedTuple):
    """1-indexed (row, column) coordinates of a diagram cell."""

    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integer parts.

    Trailing zeros are stripped on construction; the empty partition is
    ``Partition()``.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        norm = tuple(int(p) for p in parts)
        while norm and norm[-1] == 0:
            norm = norm[:-1]
        for i, p in enumerate(norm):
            if p < 0:
                raise InvalidShapeError(f"negative part {p} in {norm}")
            if i + 1 < len(norm) and norm[i + 1] > p:
                raise InvalidShapeError(f"parts not weakly decreasing: {norm}")
        object.__setattr__(self, "parts", norm)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, row: int) -> int:
        """The part at 1-indexed ``row``; 0 beyond the last row."""
        return self.parts[row - 1] if 1 <= row <= len(self.parts) else 0

    def __le__(self, other: "Partition") -> bool:
        return contains(self, other)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff ``inner`` fits inside ``outer`` row by row."""
    return all(inner.part(r) <= outer.part(r) for r in range(1, len(inner) + 1))


@dataclass(frozen=True)
class SkewShape:
    """An outer shape with an inner subshape removed.

    Equality compares both partitions: shapes with identical cell sets but
    different outer/inner pairs are distinct.
    """

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.inner, self.outer):
            raise InvalidShapeError(
                f"inner shape {self.inner.parts} not contained in outer {self.outer.parts}"
            )

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        """All cells in row-major order (by row, then column)."""
        out = []
        for r in range(1, len(self.outer) + 1):
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1):
                out.append(Cell(r, c))
        return out

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def vertical_dominoes(shape: Partition) -> int:
    """Maximal number of disjoint 1x2 vertical dominoes fitting in the shape.

    Columns are independent, so the packing is the sum of half the column
    heights rounded down.
    """
    width = shape.part(1)
    total = 0
    for c in range(1, width + 1):
        height = sum(1 for p in shape.parts if p >= c)
        total += height // 2
    return total


def horizontal_dominoes(shape: Partition) -> int:
    """Maximal number of disjoint 2x1 horizontal dominoes fitting in the shape."""
    return sum(p // 2 for p in shape.parts)


def fourlings(shape: Partition) -> int:
    """Maximal number of disjoint 2x2 squares fitting in the shape.

    Computed by pairing consecutive rows (1,2), (3,4), ...; each pair holds
    as many squares as half its shorter row. Matching the packing-search
    definition is enforced by the brute-force property suite.
    """
    return sum(p // 2 for p in shape.parts[1::2])


def row_sign(shape: SkewShape) -> int:
    """(-1) to the sum of (row - 1) over the cells of the skew shape."""
    total = 0
    for r in range(1, len(shape.outer) + 1):
        total += (r - 1) * (shape.outer.part(r) - shape.inner.part(r))
    return -1 if total % 2 else 1


def _parts_desc(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first, *rest)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n``, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for parts in _parts_desc(n, n):
        yield Partition(parts)


def enumerate_outer_extensions(alpha: Partition, n: int) -> Iterator[Partition]:
    """All shapes containing ``alpha`` with ``n`` extra cells, decreasing lex."""
    for lam in enumerate_partitions(alpha.size + n):
        if contains(alpha, lam):
            yield lam


def enumerate_inner_subshapes(alpha: Partition, n: int) -> Iterator[Partition]:
    """All subshapes of ``alpha`` with ``n`` fewer cells, decreasing lex.

    Empty when ``n`` exceeds the size of ``alpha``.
    """
    if n > alpha.size:
        return
    for mu in enumerate_partitions(alpha.size - n):
        if contains(mu, alpha):
            yield mu
