"""HTTP front end: sequence values, table reproductions, and full
Benford/equidistribution reports over a small JSON API.

Term values are serialized as decimal strings; they routinely exceed the
53-bit range that survives a JSON round trip as a number.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import tables, udstats
from .digits import DigitQuery
from .sequences import resolve_sequence

app = FastAPI(title="benfordq", version="0.1.0")

# sequences cache their terms; keep them alive across requests
_seq_cache: dict = {}


def _sequence(selector: str):
    seq = _seq_cache.get(selector)
    if seq is None:
        try:
            seq = resolve_sequence(selector)
        except KeyError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        _seq_cache[selector] = seq
    return seq


class TermRow(BaseModel):
    n: int
    value: str


class ComputeRequest(BaseModel):
    selector: str
    n_max: int = Field(ge=0, le=1_000_000)


class ComputeResponse(BaseModel):
    selector: str
    first_index: int
    terms: list[TermRow]


class TableRequest(BaseModel):
    which: Literal[1, 2, 3]


class TableRow(BaseModel):
    x: int
    cells: list[str]


class TableResponse(BaseModel):
    which: int
    caption: str
    selector: str
    base: int
    columns: list[str]
    rows: list[TableRow]
    limit_row: list[str]
    range_convention: str
    rendered: str


class ReportRequest(BaseModel):
    selector: str
    base: int = Field(default=10, ge=2, le=36)
    digit_string: Optional[str] = None
    length: Optional[int] = Field(default=None, ge=1)
    x_values: list[int] = Field(min_length=1)
    range_convention: Literal["from-zero", "from-one"] = udstats.FROM_ONE

    @model_validator(mode="after")
    def _check(self):
        if (self.digit_string is None) == (self.length is None):
            raise ValueError("give exactly one of digit_string or length")
        if any(x < 1 for x in self.x_values):
            raise ValueError("x values must be >= 1")
        if sorted(self.x_values) != self.x_values:
            raise ValueError("x values must be ascending")
        return self


class ReportResponse(BaseModel):
    reports: list[dict]


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/compute", response_model=ComputeResponse)
def compute(req: ComputeRequest) -> ComputeResponse:
    seq = _sequence(req.selector)
    if req.n_max < seq.first_index:
        raise HTTPException(status_code=400, detail="n_max below first index")
    values = seq.terms(seq.first_index, req.n_max)
    return ComputeResponse(
        selector=req.selector,
        first_index=seq.first_index,
        terms=[
            TermRow(n=seq.first_index + i, value=str(v)) for i, v in enumerate(values)
        ],
    )


@app.post("/table", response_model=TableResponse)
def table(req: TableRequest) -> TableResponse:
    result = tables.compute_table(req.which)
    return TableResponse(
        which=result.which,
        caption=result.caption,
        selector=result.selector,
        base=result.base,
        columns=list(result.columns),
        rows=[TableRow(x=x, cells=list(r)) for x, r in zip(result.x_values, result.cells)],
        limit_row=list(result.limit_row),
        range_convention=result.range_convention,
        rendered=tables.render_table(result),
    )


@app.post("/report", response_model=ReportResponse)
def report(req: ReportRequest) -> ReportResponse:
    seq = _sequence(req.selector)
    if req.digit_string is not None:
        try:
            length = len(DigitQuery.from_string(req.digit_string, req.base).digits)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
    else:
        length = req.length
    out = []
    for x in req.x_values:
        rep = udstats.build_report(seq, req.base, length, x, req.range_convention)
        out.append(rep.to_json_dict())
    return ReportResponse(reports=out)
