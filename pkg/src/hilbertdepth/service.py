"""Service layer: translates schema requests into core computations.

The FastAPI routes and the CLI both call these handlers, so in-process
and over-the-wire use produce identical payloads.
"""
from __future__ import annotations

import json

from pydantic import BaseModel

from . import schemas
from .depth import _search_depth, hdepth_by_formula, hdepth_search
from .series import expand, format_closed_series
from .veronese import (
    VeroneseParams,
    count_by_enumeration,
    genfunc_table,
    hilbert_coefficient,
    hilbert_coefficient_recurrence,
    hilbert_series_closed,
)
from .verify import SuiteResult, run_suites


def compute_series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    params = VeroneseParams(req.n, req.d)
    closed = hilbert_series_closed(params)
    terms = [
        schemas.ClosedTermPayload(
            coeff=str(t.coeff), t_power=t.t_power, pole_order=t.pole_order
        )
        for t in closed.terms
    ]
    coefficients = None
    if req.k_max is not None:
        window = expand(closed, req.k_max)
        coefficients = schemas.CoefficientWindowPayload(
            start_degree=params.d,
            values=[str(window[k]) for k in range(params.d, req.k_max + 1)],
        )
    return schemas.SeriesResponse(
        n=params.n,
        d=params.d,
        closed_form=format_closed_series(closed),
        terms=terms,
        coefficients=coefficients,
    )


def _coefficient_by_route(params: VeroneseParams, k: int, route: str) -> int:
    if route == "formula":
        return hilbert_coefficient(params, k)
    if route == "recurrence":
        return hilbert_coefficient_recurrence(params, k)
    if route == "enumerate":
        return count_by_enumeration(params, k)
    if k < params.d:
        return 0
    return genfunc_table(params.n, params.d, k).value(params.n, params.d, k)


def compute_coefficient(req: schemas.CoeffRequest) -> schemas.CoeffResponse:
    params = VeroneseParams(req.n, req.d)
    routes = schemas.COEFF_ROUTES if req.method == "all" else (req.method,)
    values = {route: _coefficient_by_route(params, req.k, route) for route in routes}
    return schemas.CoeffResponse(
        n=params.n,
        d=params.d,
        k=req.k,
        method=req.method,
        values={route: str(v) for route, v in values.items()},
        agree=len(set(values.values())) == 1,
    )


def compute_depth(req: schemas.DepthRequest) -> schemas.DepthResponse:
    params = VeroneseParams(req.n, req.d)
    if req.method == "formula":
        return schemas.DepthResponse(
            n=params.n, d=params.d, hdepth=hdepth_by_formula(params)
        )
    result = hdepth_search(params)
    failing_r, failing_k, failing_value = result.failing_r_witness
    return schemas.DepthResponse(
        n=params.n,
        d=params.d,
        hdepth=result.hdepth,
        failing_r=failing_r,
        failing_k=failing_k,
        failing_coeff=str(failing_value),
    )


def compute_table(req: schemas.TableRequest) -> schemas.TableResponse:
    rows = []
    for n in range(1, req.n_max + 1):
        for d in range(1, min(n, req.d_max) + 1):
            params = VeroneseParams(n, d)
            formula = hdepth_by_formula(params)
            searched, _ = _search_depth(params)
            rows.append(
                schemas.TableRow(
                    n=n,
                    d=d,
                    hdepth_formula=formula,
                    hdepth_search=searched,
                    agree=formula == searched,
                )
            )
    return schemas.TableResponse(rows=rows)


def _suite_payload(result: SuiteResult) -> schemas.SuiteResultPayload:
    first = None
    if result.first_counterexample is not None:
        cx = result.first_counterexample
        first = schemas.CounterexamplePayload(
            identity=cx.identity,
            n=cx.n,
            d=cx.d,
            k=cx.k,
            r=cx.r,
            lhs=str(cx.lhs),
            rhs=str(cx.rhs),
        )
    return schemas.SuiteResultPayload(
        suite=result.suite,
        checks=result.checks,
        failures=result.failures,
        passed=result.passed,
        first_counterexample=first,
    )


def run_verification(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    results = run_suites(req.suite, req.n_max, req.k_max, req.r_max)
    suites = [_suite_payload(r) for r in results]
    return schemas.VerifyResponse(
        passed=all(s.passed for s in suites),
        checks=sum(s.checks for s in suites),
        failures=sum(s.failures for s in suites),
        suites=suites,
    )


def to_json(model: BaseModel) -> str:
    """Canonical JSON rendering: model field order, two-space indent.

    json.loads followed by this same dump reproduces the bytes exactly,
    which is what the round-trip guarantee of the CLI relies on.
    """
    return json.dumps(model.model_dump(mode="json"), indent=2) + "\n"
