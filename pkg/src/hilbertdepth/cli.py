"""Command line front end.

Every subcommand builds a schema request and hands it to the service
layer, either in process (the default) or against a running server via
``--url``; output formatting is identical in both modes.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
infeasible requests), 3 internal cross-check disagreement.
"""
from __future__ import annotations

import argparse
import sys

import httpx
from pydantic import BaseModel, ValidationError

from . import schemas, service
from .errors import InternalDisagreement

_HANDLERS = {
    "/series": (service.compute_series, schemas.SeriesResponse),
    "/coeff": (service.compute_coefficient, schemas.CoeffResponse),
    "/depth": (service.compute_depth, schemas.DepthResponse),
    "/table": (service.compute_table, schemas.TableResponse),
    "/verify": (service.run_verification, schemas.VerifyResponse),
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _invoke(url: str | None, path: str, request: BaseModel) -> BaseModel:
    handler, response_model = _HANDLERS[path]
    if url is None:
        return handler(request)
    response = httpx.post(
        url.rstrip("/") + path,
        json=request.model_dump(mode="json"),
        timeout=600.0,
    )
    if response.status_code in (400, 422):
        raise CliError(2, _detail(response))
    if response.status_code == 500:
        raise CliError(3, _detail(response))
    response.raise_for_status()
    return response_model.model_validate(response.json())


def _detail(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = None
    return str(detail) if detail else response.text


def cmd_series(args: argparse.Namespace) -> int:
    req = schemas.SeriesRequest(n=args.n, d=args.d, k_max=args.terms)
    resp = _invoke(args.url, "/series", req)
    if args.json:
        sys.stdout.write(service.to_json(resp))
        return 0
    print(resp.closed_form)
    if resp.coefficients is not None:
        print("coefficients [" + ", ".join(resp.coefficients.values) + "]")
    return 0


def cmd_coeff(args: argparse.Namespace) -> int:
    req = schemas.CoeffRequest(n=args.n, d=args.d, k=args.k, method=args.method)
    resp = _invoke(args.url, "/coeff", req)
    if args.json:
        sys.stdout.write(service.to_json(resp))
    elif args.method == "all":
        for route in schemas.COEFF_ROUTES:
            print(f"{route} = {resp.values[route]}")
        print(f"agree = {str(resp.agree).lower()}")
    else:
        print(resp.values[args.method])
    if not resp.agree:
        print("hilbert: coefficient routes disagree", file=sys.stderr)
        return 3
    return 0


def cmd_depth(args: argparse.Namespace) -> int:
    req = schemas.DepthRequest(n=args.n, d=args.d, method=args.method)
    resp = _invoke(args.url, "/depth", req)
    if args.json:
        sys.stdout.write(service.to_json(resp))
    else:
        print(resp.hdepth)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    req = schemas.TableRequest(n_max=args.n_max, d_max=args.d_max)
    resp = _invoke(args.url, "/table", req)
    if args.json:
        sys.stdout.write(service.to_json(resp))
    elif args.csv:
        print("n,d,hdepth_formula,hdepth_search,agree")
        for row in resp.rows:
            print(
                f"{row.n},{row.d},{row.hdepth_formula},{row.hdepth_search},"
                f"{str(row.agree).lower()}"
            )
    else:
        print(f"{'n':>4} {'d':>4} {'hdepth_formula':>14} {'hdepth_search':>13} agree")
        for row in resp.rows:
            print(
                f"{row.n:>4} {row.d:>4} {row.hdepth_formula:>14} "
                f"{row.hdepth_search:>13} {str(row.agree).lower()}"
            )
    return 0


def _render_counterexample(cx: schemas.CounterexamplePayload) -> str:
    k = "-" if cx.k is None else cx.k
    r = "-" if cx.r is None else cx.r
    return f"(n={cx.n}, d={cx.d}, k={k}, r={r}, lhs={cx.lhs}, rhs={cx.rhs})"


def cmd_verify(args: argparse.Namespace) -> int:
    req = schemas.VerifyRequest(
        suite=args.suite, n_max=args.n_max, k_max=args.k_max, r_max=args.r_max
    )
    resp = _invoke(args.url, "/verify", req)
    if args.json:
        sys.stdout.write(service.to_json(resp))
        return 0 if resp.passed else 1
    for suite in resp.suites:
        verdict = "PASS" if suite.passed else "FAIL"
        print(f"suite {suite.suite}: {suite.checks} checks, {suite.failures} failures [{verdict}]")
        if suite.first_counterexample is not None:
            print(
                "  first counterexample: "
                + _render_counterexample(suite.first_counterexample)
            )
    if resp.passed:
        print(f"verify: PASS ({len(resp.suites)} suites, {resp.checks} checks)")
        return 0
    print(f"verify: FAIL ({resp.failures} of {resp.checks} checks failed)")
    return 1


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbert",
        description=(
            "Exact Hilbert series and Hilbert depth of squarefree Veronese "
            "ideals. Grid suites honor the HILBERT_THREADS worker count."
        ),
    )
    parser.add_argument(
        "--url",
        default=None,
        help="base URL of a running service; omit to compute in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    series = sub.add_parser("series", help="closed-form Hilbert series, optionally expanded")
    series.add_argument("n", type=int)
    series.add_argument("d", type=int)
    series.add_argument(
        "--terms", type=int, default=None, metavar="K",
        help="also print the coefficients of T^d .. T^K",
    )
    series.add_argument("--json", action="store_true")
    series.set_defaults(func=cmd_series)

    coeff = sub.add_parser("coeff", help="one Hilbert function value, by any route")
    coeff.add_argument("n", type=int)
    coeff.add_argument("d", type=int)
    coeff.add_argument("k", type=int)
    coeff.add_argument(
        "--method",
        choices=["formula", "recurrence", "enumerate", "genfunc", "all"],
        default="formula",
    )
    coeff.add_argument("--json", action="store_true")
    coeff.set_defaults(func=cmd_coeff)

    depth = sub.add_parser("depth", help="Hilbert depth by search and/or formula")
    depth.add_argument("n", type=int)
    depth.add_argument("d", type=int)
    depth.add_argument(
        "--method", choices=["search", "formula", "both"], default="both"
    )
    depth.add_argument("--json", action="store_true")
    depth.set_defaults(func=cmd_depth)

    table = sub.add_parser("table", help="depth table over a parameter grid")
    table.add_argument("n_max", type=int)
    table.add_argument("d_max", type=int)
    fmt = table.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    table.set_defaults(func=cmd_table)

    verify = sub.add_parser("verify", help="run exhaustive identity grids")
    verify.add_argument(
        "--suite",
        choices=["recurrence", "genfunc", "series", "lemma32", "prop33", "tail", "all"],
        default="all",
    )
    verify.add_argument("--n-max", type=int, default=None)
    verify.add_argument("--k-max", type=int, default=None)
    verify.add_argument("--r-max", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=cmd_verify)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hilbert: error: {exc}", file=sys.stderr)
        return exc.code
    except InternalDisagreement as exc:
        print(f"hilbert: internal disagreement: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        first = exc.errors()[0]
        print(f"hilbert: error: {first['msg']}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"hilbert: error: {exc}", file=sys.stderr)
        return 2
    except httpx.HTTPError as exc:
        print(f"hilbert: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())
