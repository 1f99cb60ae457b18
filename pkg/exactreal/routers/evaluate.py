"""
Evaluation API Router

Endpoint for evaluating calculator expressions.
"""
from fastapi import APIRouter

from ..schemas.evaluate import ErrorResponse, EvalRequest, EvalResponse
from ..services.evaluator import EvalConfig
from ..services.expression import ExpressionService

router = APIRouter()


@router.post(
    "",
    response_model=EvalResponse,
    responses={409: {"model": ErrorResponse}, 422: {"model": ErrorResponse}},
)
def evaluate_expression(request: EvalRequest):
    """
    Evaluate an expression

    Returns the value within 2^-prec (or 10^-digits) and the working
    precision the evaluator needed.
    """
    return ExpressionService.evaluate(
        request.expr,
        prec=request.prec,
        digits=request.digits,
        fmt=request.format,
        cfg=EvalConfig.from_settings(),
    )
