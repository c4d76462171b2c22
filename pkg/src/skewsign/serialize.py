"""JSON wire formats for the domain values.

Partitions are arrays of parts; skew shapes are {"outer", "inner"} pairs;
tableaux carry 1-indexed [row, col, value] entry triples with placeholder
values written as {"eps": b}; biwords are parallel {"top", "bottom"}
arrays; permutations are arrays of images.
"""
from __future__ import annotations

from typing import Any

from .insertion import TraceStep, Triple
from .shapes import Cell, Partition, SkewShape
from .tableaux import Eps, Tableau
from .words import PartialPermutation, Permutation


class SchemaError(ValueError):
    """Input JSON does not match the expected wire format."""


def partition_to_json(p: Partition) -> list[int]:
    return list(p.parts)


def partition_from_json(data: Any, label: str = "partition") -> Partition:
    if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
        raise SchemaError(f"{label} must be an array of integers, got {data!r}")
    try:
        return Partition(data)
    except ValueError as exc:
        raise SchemaError(f"bad {label}: {exc}") from exc


def skew_shape_to_json(shape: SkewShape) -> dict:
    return {"outer": partition_to_json(shape.outer), "inner": partition_to_json(shape.inner)}


def skew_shape_from_json(data: Any, label: str = "shape") -> SkewShape:
    if not isinstance(data, dict):
        raise SchemaError(f"{label} must be an object with outer/inner, got {data!r}")
    outer = partition_from_json(data.get("outer", []), f"{label}.outer")
    inner = partition_from_json(data.get("inner", []), f"{label}.inner")
    try:
        return SkewShape(outer, inner)
    except ValueError as exc:
        raise SchemaError(f"bad {label}: {exc}") from exc


def _entry_to_json(value) -> Any:
    return {"eps": value.value} if isinstance(value, Eps) else value


def _entry_from_json(value: Any, label: str):
    if isinstance(value, bool):
        raise SchemaError(f"{label}: entry must be an integer or {{'eps': b}}, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, dict) and set(value) == {"eps"} and isinstance(value["eps"], int):
        return Eps(value["eps"])
    raise SchemaError(f"{label}: entry must be an integer or {{'eps': b}}, got {value!r}")


def tableau_to_json(t: Tableau) -> dict:
    entries = [
        [cell.row, cell.col, _entry_to_json(t.entry(cell))] for cell in t.shape.cells()
    ]
    return {**skew_shape_to_json(t.shape), "entries": entries}


def tableau_from_json(data: Any, label: str = "tableau") -> Tableau:
    shape = skew_shape_from_json(data, label)
    raw = data.get("entries", [])
    if not isinstance(raw, list):
        raise SchemaError(f"{label}.entries must be an array")
    entries = {}
    for item in raw:
        if not (isinstance(item, list) and len(item) == 3):
            raise SchemaError(f"{label}.entries items must be [row, col, value], got {item!r}")
        row, col, value = item
        if not (isinstance(row, int) and isinstance(col, int) and row >= 1 and col >= 1):
            raise SchemaError(f"{label}: bad cell [{row!r}, {col!r}]")
        cell = Cell(row, col)
        if cell in entries:
            raise SchemaError(f"{label}: duplicate cell {tuple(cell)}")
        entries[cell] = _entry_from_json(value, label)
    try:
        return Tableau(shape, entries)
    except ValueError as exc:
        raise SchemaError(f"bad {label}: {exc}") from exc


def biword_to_json(pi: PartialPermutation) -> dict:
    return {"top": list(pi.top), "bottom": list(pi.bottom)}


def partial_permutation_from_json(data: Any, n: int, label: str = "pi") -> PartialPermutation:
    if not isinstance(data, dict):
        raise SchemaError(f"{label} must be an object with top/bottom arrays")
    top = data.get("top", [])
    bottom = data.get("bottom", [])
    for name, line in (("top", top), ("bottom", bottom)):
        if not isinstance(line, list) or not all(isinstance(v, int) for v in line):
            raise SchemaError(f"{label}.{name} must be an array of integers")
    try:
        return PartialPermutation(top, bottom, n)
    except ValueError as exc:
        raise SchemaError(f"bad {label}: {exc}") from exc


def permutation_to_json(p: Permutation) -> list[int]:
    return list(p.images)


def triple_to_json(triple: Triple, n: int) -> dict:
    return {
        "pi": biword_to_json(triple.pi),
        "t": tableau_to_json(triple.t),
        "u": tableau_to_json(triple.u),
        "n": n,
        "alpha": partition_to_json(triple.t.shape.outer),
    }


def triple_from_json(data: Any) -> tuple[PartialPermutation, Tableau, Tableau, int, Partition]:
    if not isinstance(data, dict):
        raise SchemaError("triple must be an object")
    n = data.get("n")
    if not isinstance(n, int) or n < 0:
        raise SchemaError(f"n must be a nonnegative integer, got {n!r}")
    pi = partial_permutation_from_json(data.get("pi", {}), n)
    t = tableau_from_json(data.get("t", {}), "t")
    u = tableau_from_json(data.get("u", {}), "u")
    alpha = partition_from_json(data.get("alpha", []), "alpha")
    return pi, t, u, n, alpha


def pair_to_json(p: Tableau, q: Tableau, n: int) -> dict:
    return {"p": tableau_to_json(p), "q": tableau_to_json(q), "n": n}


def pair_from_json(data: Any) -> tuple[Tableau, Tableau, int]:
    if not isinstance(data, dict):
        raise SchemaError("pair must be an object")
    n = data.get("n")
    if not isinstance(n, int) or n < 0:
        raise SchemaError(f"n must be a nonnegative integer, got {n!r}")
    return tableau_from_json(data.get("p", {}), "p"), tableau_from_json(data.get("q", {}), "q"), n


def trace_step_to_json(step: TraceStep) -> dict:
    return {
        "kind": step.kind,
        "step": step.step,
        "bumping_path": [[c.row, c.col] for c in step.bumping_path],
        "new_cell": [step.new_cell.row, step.new_cell.col],
        "removed_cell": [step.removed_cell.row, step.removed_cell.col]
        if step.removed_cell
        else None,
        "m": step.m,
        "p_sign_before": step.p_sign_before,
        "p_sign_after": step.p_sign_after,
        "q_sign_before": step.q_sign_before,
        "q_sign_after": step.q_sign_after,
        "q_rsgn_before": step.q_rsgn_before,
        "q_rsgn_after": step.q_rsgn_after,
        "q_size_before": step.q_size_before,
    }
