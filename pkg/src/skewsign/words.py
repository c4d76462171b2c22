"""Biwords, partial permutations, completions, and permutation signs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .tableaux import word_sign


class InvalidBiwordError(ValueError):
    """A pair of lines does not form a valid biword or partial permutation."""


@dataclass(frozen=True)
class Biword:
    """Parallel top and bottom lines of positive integers, top weakly increasing."""

    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        top = tuple(int(i) for i in top)
        bottom = tuple(int(j) for j in bottom)
        if len(top) != len(bottom):
            raise InvalidBiwordError(f"line lengths differ: {len(top)} vs {len(bottom)}")
        if any(i < 1 for i in top) or any(j < 1 for j in bottom):
            raise InvalidBiwordError("biword entries must be positive")
        if any(top[i] > top[i + 1] for i in range(len(top) - 1)):
            raise InvalidBiwordError(f"top line not weakly increasing: {top}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    def __len__(self) -> int:
        return len(self.top)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.top, self.bottom))


@dataclass(frozen=True)
class PartialPermutation(Biword):
    """A biword with distinct entries of size at most ``n`` in each line."""

    n: int = 0

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = (), n: int = 0):
        super().__init__(top, bottom)
        if n < 0:
            raise InvalidBiwordError(f"bound must be nonnegative: {n}")
        for name, line in (("top", self.top), ("bottom", self.bottom)):
            if len(set(line)) != len(line):
                raise InvalidBiwordError(f"{name} line has repeated entries: {line}")
            if any(v > n for v in line):
                raise InvalidBiwordError(f"{name} line exceeds bound {n}: {line}")
        object.__setattr__(self, "n", n)


@dataclass(frozen=True)
class Permutation:
    """A bijection on 1..n in one-line notation."""

    images: tuple[int, ...] = ()

    def __init__(self, images: Iterable[int] = ()):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidBiwordError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"position {i} out of range 1..{len(self.images)}")
        return self.images[i - 1]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.images)


def complete(pi: PartialPermutation, n: int) -> Permutation:
    """Fill the missing vertical pairs of a partial permutation.

    The values of 1..n absent from the top line are paired, in increasing
    order, with the values absent from the bottom line, and the pairs are
    merged so the top line becomes 1..n. Returns the resulting bottom line.
    """
    if n != pi.n:
        raise InvalidBiwordError(f"bound mismatch: partial permutation has n={pi.n}, got {n}")
    missing_top = [i for i in range(1, n + 1) if i not in set(pi.top)]
    missing_bottom = [j for j in range(1, n + 1) if j not in set(pi.bottom)]
    mapping = dict(zip(pi.top, pi.bottom))
    mapping.update(zip(missing_top, missing_bottom))
    return Permutation(mapping[i] for i in range(1, n + 1))


def perm_sign(p: Permutation) -> int:
    """Parity of inversions of the one-line form."""
    return word_sign(p.images)


def is_increasing_at(p: Permutation, indices: Iterable[int]) -> bool:
    """True iff the values of ``p`` at the sorted indices strictly increase."""
    idx = sorted(set(indices))
    if idx and (idx[0] < 1 or idx[-1] > len(p)):
        raise IndexError(f"indices out of range 1..{len(p)}: {idx}")
    values = [p(i) for i in idx]
    return all(values[i] < values[i + 1] for i in range(len(values) - 1))


def enumerate_partial_permutations(n: int) -> Iterator[PartialPermutation]:
    """All partial permutations with bound ``n``, each exactly once.

    Ordered by size, then lexicographically by top set, then by bottom
    arrangement.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    values = range(1, n + 1)
    for k in range(n + 1):
        for top in combinations(values, k):
            for bottom in permutations(values, k):
                yield PartialPermutation(top, bottom, n)
