"""
exactreal FastAPI Application

HTTP surface over the evaluator, the logistic map demonstration and the
fixture demos.
"""
import logging

from fastapi import FastAPI, Request, status
from fastapi.responses import JSONResponse

from .config import configure_logging, get_settings
from .errors import DomainError, ExactRealError, ParseError
from .routers import demo, evaluate, logistic

configure_logging()
logger = logging.getLogger(__name__)

settings = get_settings()

app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description="Exact real arithmetic with guaranteed absolute error"
)

app.include_router(evaluate.router, prefix="/api/v1/eval", tags=["Evaluation"])
app.include_router(logistic.router, prefix="/api/v1/logistic", tags=["Logistic Map"])
app.include_router(demo.router, prefix="/api/v1/demo", tags=["Demos"])


def error_status(exc: ExactRealError) -> int:
    """422 for bad input, 409 when the computation itself gave up"""
    if isinstance(exc, (ParseError, DomainError)):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    return status.HTTP_409_CONFLICT


@app.exception_handler(ExactRealError)
async def exactreal_error_handler(request: Request, exc: ExactRealError):
    logger.warning(f"{request.method} {request.url.path} failed: {exc.kind}: {exc}")
    return JSONResponse(
        status_code=error_status(exc),
        content={"error": exc.kind, "detail": str(exc)},
    )


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "app": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "status": "running"
    }


@app.get("/health")
async def health_check():
    """Health check endpoint"""
    return {
        "status": "healthy",
        "max_precision": settings.MAX_PREC
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "exactreal.main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.DEBUG
    )
