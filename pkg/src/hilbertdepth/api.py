"""HTTP surface: one POST endpoint per command, plus a health probe."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, schemas, service
from .errors import InternalDisagreement, RangeError, TooLarge

app = FastAPI(
    title="hilbertdepth",
    version=__version__,
    description=(
        "Exact Hilbert series and Hilbert depth of squarefree Veronese "
        "ideals, with grid verification of the identities behind them."
    ),
)


@app.exception_handler(TooLarge)
async def _too_large(request: Request, exc: TooLarge) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(RangeError)
async def _range_error(request: Request, exc: RangeError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(InternalDisagreement)
async def _disagreement(request: Request, exc: InternalDisagreement) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(version=__version__)


@app.post("/series", response_model=schemas.SeriesResponse)
def series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
    return service.compute_series(req)


@app.post("/coeff", response_model=schemas.CoeffResponse)
def coeff(req: schemas.CoeffRequest) -> schemas.CoeffResponse:
    return service.compute_coefficient(req)


@app.post("/depth", response_model=schemas.DepthResponse)
def depth(req: schemas.DepthRequest) -> schemas.DepthResponse:
    return service.compute_depth(req)


@app.post("/table", response_model=schemas.TableResponse)
def table(req: schemas.TableRequest) -> schemas.TableResponse:
    return service.compute_table(req)


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    return service.run_verification(req)
