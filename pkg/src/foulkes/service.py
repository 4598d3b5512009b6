"""HTTP front end over the core package.

A long-running process amortizes the per-n caches (character tables, multiplicity
matrices, product tensors) across requests, so batch clients can hit one server
instead of recomputing.  Status codes follow the CLI exit-code contract:

* 200 - success;
* 400 - a certification failure (e.g. the input is not a genuine character),
  body carries the failing multiplicity;
* 422 - malformed request (unknown suite/table, bad parameters).

Verification runs report per-check results in the body regardless of outcome;
a failed check is a 200 with ``passed: false``, not an HTTP error.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse, StreamingResponse
from pydantic import BaseModel, Field

from .basis import BasisCoords, coords_to_vector, phi_coords_multiplicities
from .lattice import params_from_theta, theta_from_params
from .suites import BruteCaps, run_suite
from .tables import (
    export_table,
    fraction_str,
    parse_fraction,
    partition_key,
    stream_domain,
)

SuiteName = Literal[
    "properties-a-h",
    "theorem-1",
    "theorem-2",
    "theorem-3",
    "theorem-4",
    "prop-gcd",
    "lemma-special",
    "all",
]
TableName = Literal["phi", "gamma", "psi", "omega", "irr", "c-tensor", "matrix", "gram"]
BasisTag = Literal["phi", "gamma", "psi", "omega"]

app = FastAPI(
    title="foulkes",
    description="Exact arithmetic for the characters of S_n that depend only on cycle count.",
)


class CheckModel(BaseModel):
    name: str
    scope: str
    passed: bool
    seconds: float
    witness: str | None = None


class VerifyRequest(BaseModel):
    suite: SuiteName
    n_max: int = Field(ge=1, le=64)
    cap_brute: int | None = Field(default=None, ge=1, le=10)


class VerifyResponse(BaseModel):
    suite: str
    n_max: int
    passed: bool
    checks: list[CheckModel]


class ParamRequest(BaseModel):
    n: int = Field(ge=1, le=64)
    a: list[int]


class CoordsRequest(BaseModel):
    n: int = Field(ge=1, le=64)
    coords: list[str]


class CharacterResponse(BaseModel):
    n: int
    a: list[int]
    phi_coords: list[str]
    length_values: list[str]
    multiplicities: dict[str, int]


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    caps = BruteCaps()
    if request.cap_brute is not None:
        caps = BruteCaps(
            pair_products=request.cap_brute,
            inner_product=request.cap_brute,
            permutation_module=request.cap_brute,
        )
    report = run_suite(request.suite, request.n_max, caps)
    return VerifyResponse(
        suite=report.suite,
        n_max=report.n_max,
        passed=report.passed,
        checks=[CheckModel(**c.as_dict()) for c in report.checks],
    )


@app.get("/enumerate/{n}")
def enumerate_domain(n: int) -> StreamingResponse:
    if n < 1 or n > 12:
        raise HTTPException(status_code=422, detail="n must be in 1..12")
    return StreamingResponse(stream_domain(n), media_type="application/x-ndjson")


def _character_payload(n: int, a: tuple[int, ...], coords: BasisCoords) -> CharacterResponse:
    vector = coords_to_vector(coords)
    pairs = phi_coords_multiplicities(coords)
    if any(m.denominator != 1 or m < 0 for _, m in pairs):
        raise AssertionError("payload built for a non-certified character")
    multiplicities = {partition_key(lam): int(m) for lam, m in pairs}
    return CharacterResponse(
        n=n,
        a=list(a),
        phi_coords=[fraction_str(c) for c in coords.coords],
        length_values=[fraction_str(v) for v in vector.values],
        multiplicities=multiplicities,
    )


@app.post("/param/to-theta", response_model=CharacterResponse)
def param_to_theta(request: ParamRequest) -> CharacterResponse:
    try:
        coords = theta_from_params(request.n, tuple(request.a))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return _character_payload(request.n, tuple(request.a), coords)


@app.post("/param/from-theta", response_model=CharacterResponse)
def param_from_theta(request: CoordsRequest) -> CharacterResponse:
    try:
        parsed = tuple(parse_fraction(c) for c in request.coords)
        coords = BasisCoords(request.n, "phi", parsed)
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=422, detail=f"bad coordinates: {exc}")
    try:
        a = params_from_theta(coords)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return _character_payload(request.n, a, coords)


@app.get("/export/{table}")
def export(
    table: TableName,
    n: int,
    format: Literal["json", "csv"] = "json",
    src: BasisTag = "phi",
    dst: BasisTag = "gamma",
):
    caps = {"irr": 12, "c-tensor": 12, "gram": 8}
    if n < 1 or n > caps.get(table, 16):
        raise HTTPException(status_code=422, detail="n out of range for this table")
    text = export_table(table, n, format, src=src, dst=dst)
    media = "application/json" if format == "json" else "text/csv"
    return PlainTextResponse(content=text, media_type=media)
