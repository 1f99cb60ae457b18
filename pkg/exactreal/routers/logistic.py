"""
Logistic Map API Router
"""
from fastapi import APIRouter

from ..schemas.evaluate import ErrorResponse
from ..schemas.logistic import LogisticRequest, LogisticResult
from ..services.logistic import LogisticMapService

router = APIRouter()


@router.post(
    "",
    response_model=LogisticResult,
    responses={409: {"model": ErrorResponse}, 422: {"model": ErrorResponse}},
)
def iterate_logistic(request: LogisticRequest):
    """
    Iterate x <- r x (1 - x) in the requested arithmetic
    """
    return LogisticMapService.run(
        request.steps,
        mode=request.mode,
        r=request.r,
        x0=request.x0,
        digits=request.digits,
    )
