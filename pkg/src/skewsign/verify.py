"""Exhaustive desk-scale verification of the package's sign identities.

Each check enumerates its whole parameter space with exact integer
arithmetic and returns a report; violations are collected, never raised.
Enumerations split into independent shards that merge deterministically,
so any check can fan out over worker processes.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb, factorial
from typing import Callable, Iterable, Iterator

from .insertion import Triple, forward, ledger_holds, reverse
from .shapes import (
    Partition,
    SkewShape,
    contains,
    enumerate_inner_subshapes,
    enumerate_outer_extensions,
    enumerate_partitions,
    fourlings,
    horizontal_dominoes,
    vertical_dominoes,
)
from .tableaux import (
    Tableau,
    count_standard_tableaux,
    enumerate_standard_tableaux,
    imbalance,
    relabel,
    tableau_sign,
    word_sign,
)
from .words import PartialPermutation, complete, perm_sign


@dataclass
class VerificationReport:
    """Outcome of one identity check over one parameter set."""

    identity: str
    parameters: dict
    instances: int = 0
    violations: list = field(default_factory=list)
    lhs: object = None
    rhs: object = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "parameters": self.parameters,
            "instances": self.instances,
            "violations": self.violations,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "passed": self.passed,
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


class SparsePolynomial:
    """Exact integer polynomial in three variables (q, t, x).

    Terms map exponent triples to nonzero integer coefficients.
    """

    def __init__(self, terms: dict | None = None):
        data: dict[tuple[int, int, int], int] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != 3 or any(e < 0 for e in key):
                raise ValueError(f"bad exponent triple {key}")
            coeff = int(coeff)
            if coeff:
                data[key] = data.get(key, 0) + coeff
        self.terms = {k: c for k, c in data.items() if c}

    @classmethod
    def monomial(cls, dq: int, dt: int, dx: int, coeff: int = 1) -> "SparsePolynomial":
        return cls({(dq, dt, dx): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return SparsePolynomial(merged)

    def __mul__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            return SparsePolynomial({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int, int], int] = {}
        for (a1, a2, a3), c1 in self.terms.items():
            for (b1, b2, b3), c2 in other.terms.items():
                key = (a1 + b1, a2 + b2, a3 + b3)
                out[key] = out.get(key, 0) + c1 * c2
        return SparsePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = SparsePolynomial({(0, 0, 0): 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def evaluate(self, q: int, t: int, x: int) -> int:
        return sum(c * q**dq * t**dt * x**dx for (dq, dt, dx), c in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (dq, dt, dx), coeff in sorted(self.terms.items(), reverse=True):
            factors = []
            for name, e in (("q", dq), ("t", dt), ("x", dx)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.terms!r})"


def _neg1(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def _pmap(fn: Callable, args: list, workers: int) -> list:
    """Order-preserving map over independent work units."""
    if workers <= 1 or len(args) <= 1:
        return [fn(a) for a in args]
    with ProcessPoolExecutor(max_workers=min(workers, len(args))) as pool:
        return list(pool.map(fn, args))


# ---------------------------------------------------------------------------
# Correspondence checks
# ---------------------------------------------------------------------------

def triples_for_block(alpha: Partition, n: int, k: int, top: tuple[int, ...]) -> Iterator[Triple]:
    """All domain triples whose top line is ``top`` (of size ``k``)."""
    values = range(1, n + 1)
    mus = list(enumerate_inner_subshapes(alpha, n - k))
    if not mus:
        return
    pattern_sets = [list(enumerate_standard_tableaux(SkewShape(alpha, mu))) for mu in mus]
    u_values = [v for v in values if v not in set(top)]
    for bottom in permutations(values, k):
        t_values = [v for v in values if v not in set(bottom)]
        for patterns in pattern_sets:
            for t_pat in patterns:
                t = relabel(t_pat, t_values)
                for u_pat in patterns:
                    yield Triple(PartialPermutation(top, bottom, n), t, relabel(u_pat, u_values))


def _blocks(alpha: Partition, n: int) -> list[tuple[int, tuple[int, ...]]]:
    return [
        (k, top)
        for k in range(n + 1)
        for top in combinations(range(1, n + 1), k)
    ]


def enumerate_triples(alpha: Partition, n: int) -> Iterator[Triple]:
    """Every triple in the correspondence domain for fixed alpha and n."""
    for k, top in _blocks(alpha, n):
        yield from triples_for_block(alpha, n, k, top)


def expected_triple_count(alpha: Partition, n: int) -> int:
    """Cardinality of the domain: sum over k of C(n,k)^2 k! times the
    squared tableau counts of the possible initial shapes."""
    total = 0
    for k in range(n + 1):
        inner_total = sum(
            count_standard_tableaux(SkewShape(alpha, mu)) ** 2
            for mu in enumerate_inner_subshapes(alpha, n - k)
        )
        total += comb(n, k) ** 2 * factorial(k) * inner_total
    return total


def expected_pair_count(alpha: Partition, n: int) -> int:
    """Cardinality of the image: sum of squared tableau counts over outer
    extensions of alpha by n cells."""
    return sum(
        count_standard_tableaux(SkewShape(lam, alpha)) ** 2
        for lam in enumerate_outer_extensions(alpha, n)
    )


def _tableau_key(t: Tableau):
    return (
        t.shape.outer.parts,
        t.shape.inner.parts,
        tuple(sorted((c.row, c.col, v) for c, v in t.entries.items())),
    )


def _triple_brief(triple: Triple) -> str:
    return (
        f"pi=({','.join(map(str, triple.pi.top))}/{','.join(map(str, triple.pi.bottom))})"
        f" t={triple.t!r} u={triple.u!r}"
    )


def _main_equation_holds(triple: Triple, n: int, alpha: Partition, p: Tableau, q: Tableau) -> bool:
    lam = p.shape.outer
    mu = triple.t.shape.inner
    lhs = _neg1(vertical_dominoes(lam)) * tableau_sign(p) * tableau_sign(q)
    rhs = (
        _neg1(alpha.size)
        * _neg1(vertical_dominoes(mu) + mu.size)
        * tableau_sign(triple.t)
        * tableau_sign(triple.u)
        * perm_sign(complete(triple.pi, n))
    )
    return lhs == rhs


def _main_block(args) -> tuple[int, list, list]:
    alpha_parts, n, k, top, check_ledgers = args
    alpha = Partition(alpha_parts)
    instances = 0
    violations: list[dict] = []
    images: list = []
    for triple in triples_for_block(alpha, n, k, top):
        instances += 1
        result = forward(triple.pi, triple.t, triple.u, n, alpha, assert_ledgers=False)
        if check_ledgers:
            for step in result.steps:
                if not ledger_holds(step):
                    violations.append(
                        {
                            "kind": "ledger",
                            "detail": f"step {step.step} ({step.kind}) of {_triple_brief(triple)}",
                        }
                    )
        if not _main_equation_holds(triple, n, alpha, result.p, result.q):
            violations.append(
                {"kind": "sign-transfer", "detail": _triple_brief(triple)}
            )
        images.append((_tableau_key(result.p), _tableau_key(result.q)))
    return instances, violations, images


def check_theorem_main(
    alpha: Partition, n: int, *, workers: int = 1, check_ledgers: bool = True
) -> VerificationReport:
    """Run every domain triple through the correspondence, checking the
    sign-transfer equation instance by instance, plus image distinctness
    and the image-count identity."""
    start = time.perf_counter()
    report = VerificationReport(
        identity="theorem-main",
        parameters={"alpha": list(alpha.parts), "n": n, "check_ledgers": check_ledgers},
    )
    args = [(alpha.parts, n, k, top, check_ledgers) for k, top in _blocks(alpha, n)]
    images: list = []
    for instances, violations, block_images in _pmap(_main_block, args, workers):
        report.instances += instances
        report.violations.extend(violations)
        images.extend(block_images)
    if len(set(images)) != len(images):
        report.violations.append(
            {"kind": "image-collision", "detail": "forward images are not pairwise distinct"}
        )
    expected = expected_pair_count(alpha, n)
    report.lhs = len(images)
    report.rhs = expected
    if len(images) != expected:
        report.violations.append(
            {
                "kind": "image-count",
                "detail": f"{len(images)} images but {expected} standard pairs",
            }
        )
    report.wall_time = time.perf_counter() - start
    return report


def _roundtrip_triple_block(args) -> tuple[int, list]:
    alpha_parts, n, k, top = args
    alpha = Partition(alpha_parts)
    instances = 0
    violations = []
    for triple in triples_for_block(alpha, n, k, top):
        instances += 1
        result = forward(triple.pi, triple.t, triple.u, n, alpha, assert_ledgers=False)
        try:
            back = reverse(result.p, result.q, n)
        except Exception as exc:  # report, never abort the sweep
            violations.append(
                {"kind": "reverse-error", "detail": f"{_triple_brief(triple)}: {exc}"}
            )
            continue
        if back != triple:
            violations.append(
                {"kind": "reverse-mismatch", "detail": _triple_brief(triple)}
            )
    return instances, violations


def _roundtrip_pair_block(args) -> tuple[int, list]:
    lam_parts, alpha_parts, n = args
    lam, alpha = Partition(lam_parts), Partition(alpha_parts)
    shape = SkewShape(lam, alpha)
    patterns = list(enumerate_standard_tableaux(shape))
    instances = 0
    violations = []
    for p in patterns:
        for q in patterns:
            instances += 1
            try:
                triple = reverse(p, q, n)
                result = forward(triple.pi, triple.t, triple.u, n, alpha, assert_ledgers=False)
            except Exception as exc:
                violations.append({"kind": "roundtrip-error", "detail": f"{p!r},{q!r}: {exc}"})
                continue
            if result.p != p or result.q != q:
                violations.append({"kind": "forward-mismatch", "detail": f"{p!r},{q!r}"})
    return instances, violations


def check_roundtrip(alpha: Partition, n: int, *, workers: int = 1) -> VerificationReport:
    """reverse(forward(.)) over every domain triple and forward(reverse(.))
    over every standard pair on every outer extension."""
    start = time.perf_counter()
    report = VerificationReport(
        identity="roundtrip", parameters={"alpha": list(alpha.parts), "n": n}
    )
    triple_args = [(alpha.parts, n, k, top) for k, top in _blocks(alpha, n)]
    for instances, violations in _pmap(_roundtrip_triple_block, triple_args, workers):
        report.instances += instances
        report.violations.extend(violations)
    pair_args = [
        (lam.parts, alpha.parts, n) for lam in enumerate_outer_extensions(alpha, n)
    ]
    for instances, violations in _pmap(_roundtrip_pair_block, pair_args, workers):
        report.instances += instances
        report.violations.extend(violations)
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Imbalance sum identities
# ---------------------------------------------------------------------------

def _outer_term(args) -> int:
    lam_parts, alpha_parts = args
    lam, alpha = Partition(lam_parts), Partition(alpha_parts)
    return _neg1(vertical_dominoes(lam)) * imbalance(SkewShape(lam, alpha)) ** 2


def signed_outer_sum(alpha: Partition, n: int, *, workers: int = 1) -> int:
    """Sum of (-1)^(vertical dominoes) times squared imbalance over all
    outer extensions of alpha by n cells."""
    args = [(lam.parts, alpha.parts) for lam in enumerate_outer_extensions(alpha, n)]
    return sum(_pmap(_outer_term, args, workers))


def signed_inner_sum(alpha: Partition, n: int) -> int:
    """Same signed sum over inner subshapes of alpha with n fewer cells."""
    return sum(
        _neg1(vertical_dominoes(mu)) * imbalance(SkewShape(alpha, mu)) ** 2
        for mu in enumerate_inner_subshapes(alpha, n)
    )


def check_theorem_inout(alpha: Partition, n: int, *, workers: int = 1) -> VerificationReport:
    """Signed squared-imbalance sums over outer extensions equal the inner
    subshape sums: directly for even n, and as a difference of the (n-1)-
    and n-cell inner sums for odd n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    start = time.perf_counter()
    report = VerificationReport(
        identity="inout", parameters={"alpha": list(alpha.parts), "n": n}
    )
    lhs = signed_outer_sum(alpha, n, workers=workers)
    if n % 2 == 0:
        rhs = signed_inner_sum(alpha, n)
    else:
        rhs = signed_inner_sum(alpha, n - 1) - signed_inner_sum(alpha, n)
    report.instances = sum(1 for _ in enumerate_outer_extensions(alpha, n))
    report.lhs, report.rhs = lhs, rhs
    if lhs != rhs:
        report.violations.append({"kind": "sum-mismatch", "detail": f"{lhs} != {rhs}"})
    report.wall_time = time.perf_counter() - start
    return report


def check_corollary_square(alpha: Partition, *, workers: int = 1) -> VerificationReport:
    """The squared imbalance of a nonempty ordinary shape equals signed
    outer sums at offsets n and n+1 (n even) or n-1 (n odd), n = |alpha|."""
    n = alpha.size
    if n < 1:
        raise ValueError("alpha must be nonempty")
    start = time.perf_counter()
    report = VerificationReport(
        identity="corollary-square", parameters={"alpha": list(alpha.parts)}
    )
    target = imbalance(SkewShape(alpha, Partition())) ** 2
    if n % 2 == 0:
        sums = {
            n: signed_outer_sum(alpha, n, workers=workers),
            n + 1: signed_outer_sum(alpha, n + 1, workers=workers),
        }
    else:
        sums = {n - 1: signed_outer_sum(alpha, n - 1, workers=workers)}
    report.instances = len(sums)
    report.lhs = target
    report.rhs = list(sums.values())
    for offset, value in sums.items():
        if value != target:
            report.violations.append(
                {"kind": "sum-mismatch", "detail": f"offset {offset}: {value} != {target}"}
            )
    report.wall_time = time.perf_counter() - start
    return report


def check_corollary_vanish(alpha: Partition, m: int, *, workers: int = 1) -> VerificationReport:
    """The signed outer sum at offset m vanishes for m >= n+2 (n even) or
    m >= n (n odd), n = |alpha|. Raises for m outside that range."""
    n = alpha.size
    threshold = n + 2 if n % 2 == 0 else n
    if m < threshold:
        raise ValueError(
            f"m={m} below stated range (|alpha|={n} {'even' if n % 2 == 0 else 'odd'} needs m >= {threshold})"
        )
    start = time.perf_counter()
    report = VerificationReport(
        identity="corollary-vanish", parameters={"alpha": list(alpha.parts), "m": m}
    )
    total = signed_outer_sum(alpha, m, workers=workers)
    report.instances = sum(1 for _ in enumerate_outer_extensions(alpha, m))
    report.lhs, report.rhs = total, 0
    if total != 0:
        report.violations.append({"kind": "sum-mismatch", "detail": f"{total} != 0"})
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Signed sums over the symmetric group
# ---------------------------------------------------------------------------

def signed_sum_fixed_positions(n: int, indices: Iterable[int]) -> int:
    """Closed form for the sum of signs over permutations of 1..n that
    increase along the given positions: 1 if all positions are fixed; 0 if
    two or more are free; for exactly one free position a, 0 when n is
    even and (-1)**(a-1) when n is odd."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    idx = set(int(i) for i in indices)
    if idx and (min(idx) < 1 or max(idx) > n):
        raise ValueError(f"indices out of range 1..{n}: {sorted(idx)}")
    k = len(idx)
    if k == n:
        return 1
    if k <= n - 2:
        return 0
    if n % 2 == 0:
        return 0
    missing = (set(range(1, n + 1)) - idx).pop()
    return _neg1(missing - 1)


def brute_force_signed_sum(n: int, indices: Iterable[int]) -> int:
    """Oracle for the closed form: enumerate all of S_n directly."""
    idx = sorted(set(indices))
    total = 0
    for perm in permutations(range(1, n + 1)):
        values = [perm[i - 1] for i in idx]
        if all(values[i] < values[i + 1] for i in range(len(values) - 1)):
            total += word_sign(perm)
    return total


def check_signed_sum(n: int) -> VerificationReport:
    """Closed form versus brute force for every index subset of 1..n."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    start = time.perf_counter()
    report = VerificationReport(identity="signed-sum", parameters={"n": n})
    signs = {perm: word_sign(perm) for perm in permutations(range(1, n + 1))}
    for k in range(n + 1):
        for subset in combinations(range(1, n + 1), k):
            report.instances += 1
            closed = signed_sum_fixed_positions(n, subset)
            brute = 0
            for perm, sign in signs.items():
                values = [perm[i - 1] for i in subset]
                if all(values[i] < values[i + 1] for i in range(len(values) - 1)):
                    brute += sign
            if closed != brute:
                report.violations.append(
                    {"kind": "closed-form", "detail": f"indices {subset}: {closed} != {brute}"}
                )
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Domino statistics generating identities
# ---------------------------------------------------------------------------

def _stat_term(args) -> tuple[int, int, int, int]:
    (lam_parts,) = args
    lam = Partition(lam_parts)
    return (
        vertical_dominoes(lam),
        fourlings(lam),
        horizontal_dominoes(lam),
        imbalance(SkewShape(lam, Partition())),
    )


def check_theorem8(n: int, *, workers: int = 1) -> VerificationReport:
    """Exact generating-polynomial identities over all shapes of size n.

    (a) the q/t/x-weighted imbalance sum equals (q+x)**floor(n/2), so the
    all-ones specialization counts 2**floor(n/2); (b) for n >= 2 with
    n != 1 mod 4, the signed t-weighted squared-imbalance sum is the zero
    polynomial (at n = 0 that sum is trivially 1, so no claim is made).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = time.perf_counter()
    report = VerificationReport(identity="theorem8", parameters={"n": n})
    args = [(lam.parts,) for lam in enumerate_partitions(n)]
    stats = _pmap(_stat_term, args, workers)
    report.instances = len(stats)

    poly_a = SparsePolynomial()
    poly_b = SparsePolynomial()
    for v, d, h, imb in stats:
        poly_a = poly_a + SparsePolynomial.monomial(v, d, h, imb)
        poly_b = poly_b + SparsePolynomial.monomial(0, d, 0, _neg1(v) * imb * imb)
    half = n // 2
    expected = SparsePolynomial(
        {(k, 0, half - k): comb(half, k) for k in range(half + 1)}
    )
    report.lhs = str(poly_a)
    report.rhs = str(expected)
    if poly_a != expected:
        report.violations.append(
            {"kind": "weighted-sum", "detail": f"{poly_a} != {expected}"}
        )
    if poly_a.evaluate(1, 1, 1) != 2**half:
        report.violations.append(
            {
                "kind": "specialization",
                "detail": f"all-ones value {poly_a.evaluate(1, 1, 1)} != {2 ** half}",
            }
        )
    if n >= 2 and n % 4 != 1 and not poly_b.is_zero:
        report.violations.append(
            {"kind": "signed-square-sum", "detail": f"nonzero polynomial {poly_b}"}
        )
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Tableau-count identity
# ---------------------------------------------------------------------------

def check_counting_identity(
    alpha: Partition, beta: Partition, n: int, m: int
) -> VerificationReport:
    """Products of skew tableau counts over common outer shapes equal the
    binomially weighted products over common inner subshapes."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    start = time.perf_counter()
    report = VerificationReport(
        identity="counting",
        parameters={"alpha": list(alpha.parts), "beta": list(beta.parts), "n": n, "m": m},
    )
    lhs = 0
    if beta.size + n == alpha.size + m:
        for lam in enumerate_partitions(beta.size + n):
            if contains(beta, lam) and contains(alpha, lam):
                report.instances += 1
                lhs += count_standard_tableaux(SkewShape(lam, beta)) * count_standard_tableaux(
                    SkewShape(lam, alpha)
                )
    rhs = 0
    for k in range(min(n, m) + 1):
        for mu in enumerate_inner_subshapes(alpha, n - k):
            if contains(mu, beta) and beta.size - mu.size == m - k:
                report.instances += 1
                rhs += (
                    comb(n, k)
                    * comb(m, k)
                    * factorial(k)
                    * count_standard_tableaux(SkewShape(alpha, mu))
                    * count_standard_tableaux(SkewShape(beta, mu))
                )
    report.lhs, report.rhs = lhs, rhs
    if lhs != rhs:
        report.violations.append({"kind": "sum-mismatch", "detail": f"{lhs} != {rhs}"})
    report.wall_time = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Identity registry for CLI and service dispatch
# ---------------------------------------------------------------------------

IDENTITIES = {
    "theorem-main": ("alpha", "n"),
    "inout": ("alpha", "n"),
    "corollary-square": ("alpha",),
    "corollary-vanish": ("alpha", "m"),
    "theorem8": ("n",),
    "counting": ("alpha", "beta", "n", "m"),
    "signed-sum": ("n",),
}


def run_identity(
    name: str,
    *,
    alpha: Partition | None = None,
    beta: Partition | None = None,
    n: int | None = None,
    m: int | None = None,
    workers: int = 1,
    check_ledgers: bool = True,
) -> VerificationReport:
    """Dispatch an identity check by its public name."""
    if name not in IDENTITIES:
        known = ", ".join(sorted(IDENTITIES))
        raise ValueError(f"unknown identity {name!r} (expected one of: {known})")
    supplied = {"alpha": alpha, "beta": beta, "n": n, "m": m}
    missing = [p for p in IDENTITIES[name] if supplied[p] is None]
    if missing:
        raise ValueError(f"identity {name!r} requires parameters: {', '.join(missing)}")
    if name == "theorem-main":
        return check_theorem_main(alpha, n, workers=workers, check_ledgers=check_ledgers)
    if name == "inout":
        return check_theorem_inout(alpha, n, workers=workers)
    if name == "corollary-square":
        return check_corollary_square(alpha, workers=workers)
    if name == "corollary-vanish":
        return check_corollary_vanish(alpha, m, workers=workers)
    if name == "theorem8":
        return check_theorem8(n, workers=workers)
    if name == "counting":
        return check_counting_identity(alpha, beta, n, m)
    return check_signed_sum(n)
