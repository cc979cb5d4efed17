"""HTTP front end: every verification check as an endpoint.

POST /checks/{name} runs one named check with the parameters of the
request body and returns the same versioned report payload the CLI
prints; GET /checks lists what can be run.  The CLI stays a thin
in-process client of the same registry, so both surfaces cannot drift.
"""

from __future__ import annotations

from typing import Any, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .checks import CHECKS, run_check, validate_params
from .reports import SCHEMA_VERSION

app = FastAPI(
    title="modpalg verification service",
    version="0.1.0",
    description="Exact mod-p graded algebra checks with machine-readable verdicts.",
)


class CheckRequest(BaseModel):
    p: Optional[int] = Field(default=None, description="odd prime, default 3")
    n: Optional[int] = Field(default=None, description="rank / size parameter")
    blocks: Optional[int] = Field(default=None, description="number of Gamma blocks")
    max_degree: Optional[int] = Field(default=None, description="degree or index bound")
    seed: Optional[int] = Field(default=None, description="recorded sampling seed")


class ReportModel(BaseModel):
    check: str
    params: dict[str, Any]
    status: str
    details: list[dict[str, Any]]
    counterexample: Any = None
    elapsed_ms: float


class RunResponse(BaseModel):
    schema_version: int = Field(alias="schema")
    reports: list[ReportModel]
    passed: bool

    model_config = {"populate_by_name": True}


@app.get("/checks")
def list_checks() -> dict[str, list[str]]:
    return {"checks": sorted(CHECKS)}


@app.post("/checks/{name}", response_model=RunResponse, response_model_by_alias=True)
def run_named_check(name: str, request: CheckRequest) -> RunResponse:
    if name not in CHECKS:
        raise HTTPException(status_code=404, detail=f"unknown check {name!r}")
    params = request.model_dump()
    err = validate_params(params)
    if err:
        raise HTTPException(status_code=422, detail=err)
    reports = run_check(name, params)
    return RunResponse(
        **{"schema": SCHEMA_VERSION},
        reports=[ReportModel(**r.to_dict()) for r in reports],
        passed=all(r.passed for r in reports),
    )


@app.get("/healthz")
def healthz() -> dict[str, str]:
    return {"status": "ok"}
