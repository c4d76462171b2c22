"""The skew Robinson-Schensted engine.

External insertions row-bump a new value into the P-tableau starting at
row 1 and grow one outer cell. Internal insertions launch the bump cascade
from an inner corner of the current shape: the corner cell leaves the skew
part (the inner shape grows) and one outer cell is added. The Q-tableau is
seeded with placeholder entries mirroring the initial U-tableau; each
internal insertion consumes the smallest placeholder and records its step
number at the new cell, so every step leaves a checkable sign ledger.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .shapes import Cell, Partition, SkewShape, row_sign
from .tableaux import (
    Eps,
    Tableau,
    relabel,
    standardize,
    tableau_sign,
)
from .words import PartialPermutation, Permutation, complete, is_increasing_at


class InsertionError(ValueError):
    """An insertion step violates its preconditions."""


class TripleError(ValueError):
    """Inputs do not satisfy the correspondence's domain conditions."""


class LedgerError(RuntimeError):
    """A per-step sign relation failed to hold."""


@dataclass(frozen=True)
class InsertionState:
    """P- and Q-tableaux of a common skew shape, partway through insertion."""

    p: Tableau
    q: Tableau
    alpha: Partition
    step: int = 0

    def __post_init__(self):
        if self.p.shape != self.q.shape:
            raise InsertionError(
                f"P and Q must share a shape: {self.p.shape} vs {self.q.shape}"
            )


@dataclass(frozen=True)
class TraceStep:
    """Record of one insertion step, with the sign data its ledger needs.

    ``m`` is the number of P-entries smaller than the inserted value and is
    recorded for external steps only.
    """

    kind: str
    step: int
    bumping_path: tuple[Cell, ...]
    new_cell: Cell
    removed_cell: Cell | None
    m: int | None
    p_sign_before: int
    p_sign_after: int
    q_sign_before: int
    q_sign_after: int
    q_rsgn_before: int
    q_rsgn_after: int
    q_size_before: int


@dataclass(frozen=True)
class ForwardResult:
    p: Tableau
    q: Tableau
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class Triple:
    pi: PartialPermutation
    t: Tableau
    u: Tableau


@dataclass(frozen=True)
class Quadruple:
    perm: Permutation
    index_set: frozenset[int]
    t_std: Tableau
    u_std: Tableau


def ledger_holds(step: TraceStep) -> bool:
    """Check the step's sign relation.

    For both step kinds the P-sign ratio must equal the Q-sign ratio times
    the Q row-sign ratio times (-1) to the prior Q size; external steps
    carry an extra factor (-1)**m.
    """
    lhs = step.p_sign_after * step.p_sign_before
    rhs = (
        step.q_sign_after
        * step.q_sign_before
        * step.q_rsgn_after
        * step.q_rsgn_before
        * (-1) ** step.q_size_before
    )
    if step.kind == "external":
        rhs *= (-1) ** step.m
    return lhs == rhs


def _check_step_number(q: Tableau, k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InsertionError(f"step number must be a positive integer: {k!r}")
    plain = [v for v in q.entries.values() if not isinstance(v, Eps)]
    if plain and k <= max(plain):
        raise InsertionError(f"step number {k} not larger than existing Q entries")


def _bump(entries: dict[Cell, int], outer: list[int], inner: Partition, x: int, start_row: int):
    """Cascade ``x`` down the rows from ``start_row`` until it is appended.

    In each row the carried value replaces the leftmost entry greater than
    it; if none exists it is appended just right of the row's last cell,
    creating one new outer cell. Mutates ``entries`` and ``outer``; returns
    the landing path and the new cell.
    """
    r = start_row
    path: list[Cell] = []
    while True:
        row_outer = outer[r - 1] if r <= len(outer) else 0
        target = None
        for c in range(inner.part(r) + 1, row_outer + 1):
            if entries[Cell(r, c)] > x:
                target = c
                break
        if target is None:
            cell = Cell(r, row_outer + 1)
            entries[cell] = x
            while len(outer) < r:
                outer.append(0)
            outer[r - 1] = cell.col
            path.append(cell)
            return path, cell
        cell = Cell(r, target)
        entries[cell], x = x, entries[cell]
        path.append(cell)
        r += 1


def _q_stats(q: Tableau) -> tuple[int, int, int]:
    return tableau_sign(q), row_sign(q.shape), q.size


def external_insert(state: InsertionState, j: int, k: int) -> tuple[InsertionState, TraceStep]:
    """Row-insert the value ``j`` into P starting at row 1; Q gains ``k``
    at the new cell. Returns the successor state and its trace step."""
    p, q = state.p, state.q
    if not isinstance(j, int) or isinstance(j, bool) or j < 1:
        raise InsertionError(f"inserted value must be a positive integer: {j!r}")
    if j in set(p.entries.values()):
        raise InsertionError(f"value {j} already present in P")
    _check_step_number(q, k)

    m = sum(1 for v in p.entries.values() if v < j)
    p_sign_before = tableau_sign(p)
    q_sign_before, q_rsgn_before, q_size_before = _q_stats(q)

    entries = dict(p.entries)
    outer = list(p.shape.outer.parts)
    path, new_cell = _bump(entries, outer, p.shape.inner, j, 1)
    shape = SkewShape(Partition(outer), p.shape.inner)
    p_next = Tableau(shape, entries)
    q_next = Tableau(shape, {**q.entries, new_cell: k})

    trace = TraceStep(
        kind="external",
        step=k,
        bumping_path=tuple(path),
        new_cell=new_cell,
        removed_cell=None,
        m=m,
        p_sign_before=p_sign_before,
        p_sign_after=tableau_sign(p_next),
        q_sign_before=q_sign_before,
        q_sign_after=tableau_sign(q_next),
        q_rsgn_before=q_rsgn_before,
        q_rsgn_after=row_sign(shape),
        q_size_before=q_size_before,
    )
    return InsertionState(p_next, q_next, state.alpha, state.step + 1), trace


def internal_insert(state: InsertionState, k: int) -> tuple[InsertionState, TraceStep]:
    """Launch the bump cascade from the cell of Q's smallest placeholder.

    That cell is an inner corner of the current shape: the placeholder is
    removed, the P-value there moves into the row below and cascades, the
    inner shape grows by the corner cell, and Q gains ``k`` at the new
    outer cell.
    """
    p, q = state.p, state.q
    eps_cells = [(cell, v) for cell, v in q.entries.items() if isinstance(v, Eps)]
    if not eps_cells:
        raise InsertionError("no placeholder entries left in Q")
    _check_step_number(q, k)

    source, _ = min(eps_cells, key=lambda cv: cv[1].value)
    inner = p.shape.inner
    if source.col != inner.part(source.row) + 1:
        raise InsertionError(f"source cell {tuple(source)} is not an inner corner")

    p_sign_before = tableau_sign(p)
    q_sign_before, q_rsgn_before, q_size_before = _q_stats(q)

    carried = p.entry(source)
    entries = {cell: v for cell, v in p.entries.items() if cell != source}
    inner_parts = list(inner.parts)
    while len(inner_parts) < source.row:
        inner_parts.append(0)
    inner_parts[source.row - 1] += 1
    new_inner = Partition(inner_parts)

    outer = list(p.shape.outer.parts)
    path, new_cell = _bump(entries, outer, new_inner, carried, source.row + 1)
    shape = SkewShape(Partition(outer), new_inner)
    p_next = Tableau(shape, entries)
    q_entries = {cell: v for cell, v in q.entries.items() if cell != source}
    q_entries[new_cell] = k
    q_next = Tableau(shape, q_entries)

    trace = TraceStep(
        kind="internal",
        step=k,
        bumping_path=tuple(path),
        new_cell=new_cell,
        removed_cell=source,
        m=None,
        p_sign_before=p_sign_before,
        p_sign_after=tableau_sign(p_next),
        q_sign_before=q_sign_before,
        q_sign_after=tableau_sign(q_next),
        q_rsgn_before=q_rsgn_before,
        q_rsgn_after=row_sign(shape),
        q_size_before=q_size_before,
    )
    return InsertionState(p_next, q_next, state.alpha, state.step + 1), trace


def _validate_triple(pi: PartialPermutation, t: Tableau, u: Tableau, n: int, alpha: Partition) -> None:
    if t.shape != u.shape:
        raise TripleError(f"T and U must share a shape: {t.shape} vs {u.shape}")
    if t.shape.outer != alpha:
        raise TripleError(f"T and U must live on {alpha}/mu, got outer {t.shape.outer}")
    if pi.n != n:
        raise TripleError(f"partial permutation bound {pi.n} does not match n={n}")
    for tableau, name in ((t, "T"), (u, "U")):
        if any(isinstance(v, Eps) for v in tableau.entries.values()):
            raise TripleError(f"{name} must contain plain integer entries")
    full = set(range(1, n + 1))
    t_values = set(t.entries.values())
    u_values = set(u.entries.values())
    if set(pi.bottom) & t_values or set(pi.bottom) | t_values != full:
        raise TripleError("bottom line and T entries must partition 1..n")
    if set(pi.top) & u_values or set(pi.top) | u_values != full:
        raise TripleError("top line and U entries must partition 1..n")


def forward(
    pi: PartialPermutation,
    t: Tableau,
    u: Tableau,
    n: int,
    alpha: Partition,
    *,
    assert_ledgers: bool = True,
    epsilon_q: bool = True,
) -> ForwardResult:
    """Map a triple (partial permutation, T, U) to the standard pair (P, Q).

    Steps k = 1..n fire in order: values in the top line trigger external
    insertion of their partner, all other k sit in U and trigger internal
    insertion. With ``epsilon_q`` the Q-trace carries the placeholder
    bookkeeping the step ledgers are stated for; without it the trace
    reports the plain Q-tableau on its grown-outer/fixed-inner shape (the
    final pair is identical either way).
    """
    if assert_ledgers and not epsilon_q:
        raise ValueError("ledger assertions require placeholder bookkeeping")
    _validate_triple(pi, t, u, n, alpha)

    partner = dict(zip(pi.top, pi.bottom))
    u_cell_of = {v: cell for cell, v in u.entries.items()}
    q0 = Tableau(t.shape, {cell: Eps(v) for cell, v in u.entries.items()})
    state = InsertionState(t, q0, alpha, 0)
    states = [state]
    steps: list[TraceStep] = []
    for k in range(1, n + 1):
        if k in partner:
            state, trace = external_insert(state, partner[k], k)
        else:
            state, trace = internal_insert(state, k)
            if trace.removed_cell != u_cell_of[k]:
                raise InsertionError(
                    f"internal step {k} consumed {trace.removed_cell}, expected {u_cell_of[k]}"
                )
        if assert_ledgers and not ledger_holds(trace):
            raise LedgerError(f"sign ledger failed at step {k}: {trace}")
        states.append(state)
        steps.append(trace)

    p_out, q_out = state.p, state.q
    if p_out.shape.inner != alpha:
        raise InsertionError(
            f"final inner shape {p_out.shape.inner} differs from anchor {alpha}"
        )
    if any(isinstance(v, Eps) for v in q_out.entries.values()):
        raise InsertionError("unconsumed placeholder entries remain in Q")
    if not (p_out.is_standard() and q_out.is_standard()):
        raise InsertionError("resulting tableaux are not standard")

    if not epsilon_q:
        steps = [
            _replay_plain_q(states[i], states[i + 1], steps[i], alpha)
            for i in range(len(steps))
        ]
    return ForwardResult(p_out, q_out, tuple(steps))


def _plain_q(state: InsertionState, alpha: Partition) -> Tableau:
    entries = {c: v for c, v in state.q.entries.items() if not isinstance(v, Eps)}
    return Tableau(SkewShape(state.p.shape.outer, alpha), entries)


def _replay_plain_q(before: InsertionState, after: InsertionState, trace: TraceStep, alpha: Partition) -> TraceStep:
    q_before = _plain_q(before, alpha)
    q_after = _plain_q(after, alpha)
    return replace(
        trace,
        q_sign_before=tableau_sign(q_before),
        q_sign_after=tableau_sign(q_after),
        q_rsgn_before=row_sign(q_before.shape),
        q_rsgn_after=row_sign(q_after.shape),
        q_size_before=q_before.size,
    )


def reverse(p: Tableau, q: Tableau, n: int) -> Triple:
    """Invert the correspondence: peel steps n..1 off a standard pair.

    Each step removes k's cell from Q, takes the P-value there, and bumps
    it upward, swapping with the rightmost smaller entry per row. A chain
    that exits above row 1 emits a vertical pair of the partial
    permutation (an external step undone); a chain that reaches a row with
    no smaller entry parks the value in a new cell prepended at the row's
    left end, shrinking the inner shape, and records k there as a U-entry
    (an internal step undone).
    """
    if p.shape != q.shape:
        raise TripleError(f"P and Q must share a shape: {p.shape} vs {q.shape}")
    if p.size != n:
        raise TripleError(f"expected {n} entries, found {p.size}")
    if not (p.is_standard() and q.is_standard()):
        raise TripleError("P and Q must be standard")

    alpha = p.shape.inner
    entries = dict(p.entries)
    outer = list(p.shape.outer.parts)
    inner = list(alpha.parts)
    cell_of = {v: cell for cell, v in q.entries.items()}
    pairs: list[tuple[int, int]] = []
    u_cells: dict[Cell, int] = {}

    for k in range(n, 0, -1):
        cell = cell_of.pop(k)
        if cell.row > len(outer) or outer[cell.row - 1] != cell.col:
            raise TripleError(f"entry {k} of Q is not at an outer corner")
        x = entries.pop(cell)
        outer[cell.row - 1] -= 1
        while outer and outer[-1] == 0:
            outer.pop()

        r = cell.row - 1
        stalled = False
        while r >= 1:
            row_inner = inner[r - 1] if r <= len(inner) else 0
            row_outer = outer[r - 1] if r <= len(outer) else 0
            target = None
            for c in range(row_outer, row_inner, -1):
                if entries[Cell(r, c)] < x:
                    target = c
                    break
            if target is None:
                if row_inner < 1:
                    raise TripleError(f"reverse bump stalled in row {r} with no inner cell")
                parked = Cell(r, row_inner)
                entries[parked] = x
                inner[r - 1] -= 1
                u_cells[parked] = k
                stalled = True
                break
            swap_cell = Cell(r, target)
            entries[swap_cell], x = x, entries[swap_cell]
            r -= 1
        if not stalled:
            pairs.append((k, x))
        # every intermediate P must stay a valid tableau
        Tableau(SkewShape(Partition(outer), Partition(inner)), entries)

    final_outer = Partition(outer)
    if final_outer != alpha:
        raise TripleError(f"final outer shape {final_outer} differs from anchor {alpha}")
    shape = SkewShape(alpha, Partition(inner))
    t = Tableau(shape, entries)
    u = Tableau(shape, u_cells)
    pairs.reverse()
    pi = PartialPermutation([a for a, _ in pairs], [b for _, b in pairs], n)
    _validate_triple(pi, t, u, n, alpha)
    return Triple(pi, t, u)


def triple_to_quadruple(pi: PartialPermutation, t: Tableau, u: Tableau, n: int) -> Quadruple:
    """Recode a domain triple as (full permutation, index set, standard T, U).

    The permutation is the completion of the partial one; the index set is
    the set of top-line gaps (equivalently U's entry set), which indexes an
    increasing subsequence of the completion; T and U are standardized.
    """
    _validate_triple(pi, t, u, n, t.shape.outer)
    perm = complete(pi, n)
    index_set = frozenset(range(1, n + 1)) - set(pi.top)
    if not is_increasing_at(perm, index_set):
        raise TripleError("completion is not increasing on the gap positions")
    return Quadruple(perm, index_set, standardize(t), standardize(u))


def quadruple_to_triple(
    perm: Permutation,
    index_set: frozenset[int],
    t_std: Tableau,
    u_std: Tableau,
) -> Triple:
    """Invert the recoding: drop the indexed pairs and relabel T, U.

    Entry j of the standard U becomes the j-th smallest index; entry j of
    the standard T becomes the permutation's value there.
    """
    if t_std.shape != u_std.shape:
        raise TripleError(f"T and U must share a shape: {t_std.shape} vs {u_std.shape}")
    if not (t_std.is_standard() and u_std.is_standard()):
        raise TripleError("T and U must be standard")
    idx = sorted(index_set)
    if len(idx) != t_std.size:
        raise TripleError(f"index set size {len(idx)} does not match shape size {t_std.size}")
    if not is_increasing_at(perm, idx):
        raise TripleError("permutation is not increasing on the index set")
    n = len(perm)
    top = [i for i in range(1, n + 1) if i not in index_set]
    pi = PartialPermutation(top, [perm(i) for i in top], n)
    u = relabel(u_std, idx)
    t = relabel(t_std, [perm(i) for i in idx])
    return Triple(pi, t, u)
