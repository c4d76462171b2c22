"""HTTP service wrapping the core operations.

Endpoints accept and return the package's JSON wire formats; the handler
functions are plain dict-to-dict and are reused by the CLI in process.
"""
from __future__ import annotations

from typing import Any, Optional, Union

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__, serialize
from .insertion import forward, reverse
from .shapes import SkewShape
from .tableaux import enumerate_standard_tableaux, tableau_sign
from .verify import IDENTITIES, run_identity


class EpsValue(BaseModel):
    eps: int


class TableauModel(BaseModel):
    outer: list[int] = Field(default_factory=list)
    inner: list[int] = Field(default_factory=list)
    entries: list[tuple[int, int, Union[int, EpsValue]]] = Field(default_factory=list)


class BiwordModel(BaseModel):
    top: list[int] = Field(default_factory=list)
    bottom: list[int] = Field(default_factory=list)


class ImbalanceRequest(BaseModel):
    outer: list[int]
    inner: list[int] = Field(default_factory=list)


class ImbalanceResponse(BaseModel):
    outer: list[int]
    inner: list[int]
    cells: int
    tableau_count: int
    imbalance: int
    plus: int
    minus: int


class ForwardRequest(BaseModel):
    pi: BiwordModel
    t: TableauModel
    u: TableauModel
    n: int
    alpha: list[int] = Field(default_factory=list)
    trace: bool = False
    assert_ledgers: bool = True


class ForwardResponse(BaseModel):
    p: TableauModel
    q: TableauModel
    n: int
    trace: Optional[list[dict]] = None


class ReverseRequest(BaseModel):
    p: TableauModel
    q: TableauModel
    n: int


class ReverseResponse(BaseModel):
    pi: BiwordModel
    t: TableauModel
    u: TableauModel
    n: int
    alpha: list[int]


class VerifyRequest(BaseModel):
    identity: str
    alpha: Optional[list[int]] = None
    beta: Optional[list[int]] = None
    n: Optional[int] = None
    m: Optional[int] = None
    workers: int = 1
    assert_ledgers: bool = True


class VerifyResponse(BaseModel):
    identity: str
    parameters: dict
    instances: int
    violations: list[dict]
    lhs: Any = None
    rhs: Any = None
    passed: bool


def compute_imbalance(outer: list[int], inner: list[int]) -> dict:
    shape = SkewShape(
        serialize.partition_from_json(outer, "outer"),
        serialize.partition_from_json(inner, "inner"),
    )
    plus = minus = 0
    for t in enumerate_standard_tableaux(shape):
        if tableau_sign(t) == 1:
            plus += 1
        else:
            minus += 1
    return {
        "outer": list(shape.outer.parts),
        "inner": list(shape.inner.parts),
        "cells": shape.size,
        "tableau_count": plus + minus,
        "imbalance": plus - minus,
        "plus": plus,
        "minus": minus,
    }


def run_forward(payload: dict, *, trace: bool = False, assert_ledgers: bool = True) -> dict:
    pi, t, u, n, alpha = serialize.triple_from_json(payload)
    result = forward(pi, t, u, n, alpha, assert_ledgers=assert_ledgers)
    out = serialize.pair_to_json(result.p, result.q, n)
    if trace:
        out["trace"] = [serialize.trace_step_to_json(s) for s in result.steps]
    return out


def run_reverse(payload: dict) -> dict:
    p, q, n = serialize.pair_from_json(payload)
    triple = reverse(p, q, n)
    return serialize.triple_to_json(triple, n)


def run_verification(
    identity: str,
    *,
    alpha: list[int] | None = None,
    beta: list[int] | None = None,
    n: int | None = None,
    m: int | None = None,
    workers: int = 1,
    check_ledgers: bool = True,
) -> dict:
    report = run_identity(
        identity,
        alpha=serialize.partition_from_json(alpha, "alpha") if alpha is not None else None,
        beta=serialize.partition_from_json(beta, "beta") if beta is not None else None,
        n=n,
        m=m,
        workers=workers,
        check_ledgers=check_ledgers,
    )
    return report.to_dict()


app = FastAPI(
    title="skewsign",
    version=__version__,
    description="Exact sign-imbalance arithmetic for skew Young tableaux",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__, "identities": sorted(IDENTITIES)}


@app.post("/imbalance", response_model=ImbalanceResponse)
def imbalance_endpoint(request: ImbalanceRequest) -> dict:
    try:
        return compute_imbalance(request.outer, request.inner)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/rs/forward", response_model=ForwardResponse, response_model_exclude_none=True)
def forward_endpoint(request: ForwardRequest) -> dict:
    payload = {
        "pi": request.pi.model_dump(),
        "t": _tableau_payload(request.t),
        "u": _tableau_payload(request.u),
        "n": request.n,
        "alpha": request.alpha,
    }
    try:
        return run_forward(payload, trace=request.trace, assert_ledgers=request.assert_ledgers)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/rs/reverse", response_model=ReverseResponse)
def reverse_endpoint(request: ReverseRequest) -> dict:
    payload = {"p": _tableau_payload(request.p), "q": _tableau_payload(request.q), "n": request.n}
    try:
        return run_reverse(payload)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(request: VerifyRequest) -> dict:
    try:
        return run_verification(
            request.identity,
            alpha=request.alpha,
            beta=request.beta,
            n=request.n,
            m=request.m,
            workers=request.workers,
            check_ledgers=request.assert_ledgers,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def _tableau_payload(model: TableauModel) -> dict:
    entries = []
    for row, col, value in model.entries:
        entries.append([row, col, {"eps": value.eps} if isinstance(value, EpsValue) else value])
    return {"outer": model.outer, "inner": model.inner, "entries": entries}
