"""
Expression Service

Parses calculator expressions and evaluates them to a requested precision.
"""
import logging
from fractions import Fraction
from typing import Dict, Optional

from ..models.expr import format_expr, format_number
from ..models.real import Real
from ..schemas.evaluate import EvalResponse, OutputFormat
from .evaluator import EvalConfig, approx_with_stats, decimal_bits, to_decimal
from .parser import parse_expr, to_real

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 10


class ExpressionService:
    """
    Front end from expression text to approximations
    """

    @staticmethod
    def evaluate(
        src: str,
        prec: Optional[int] = None,
        digits: Optional[int] = None,
        fmt: OutputFormat = OutputFormat.DEC,
        cfg: Optional[EvalConfig] = None,
        env: Optional[Dict[str, Real]] = None,
    ) -> EvalResponse:
        """
        Evaluate an expression

        Args:
            src: Expression text
            prec: Bits of absolute precision; exclusive with digits
            digits: Decimal digits; used when prec is not given
            fmt: dec prints a decimal, dyadic prints a_n*2^-n
            cfg: Precision schedule
            env: Values of free variables

        Returns:
            EvalResponse with the printed value and the evaluation cost
        """
        if prec is not None and digits is not None:
            raise ValueError("give prec or digits, not both")
        expr = parse_expr(src)
        x = to_real(expr, env)
        if prec is None:
            digits = DEFAULT_DIGITS if digits is None else digits
            n = decimal_bits(digits)
        else:
            n = prec

        a, stats = approx_with_stats(x, n, cfg)
        logger.info(f"evaluated {src!r} at n={n}: {stats.work_prec} bits, {stats.restarts} restarts")
        if OutputFormat(fmt) is OutputFormat.DYADIC:
            value = f"{a}*2^{-n}"
        elif prec is None:
            # served from the node cache filled above
            value = to_decimal(x, digits, cfg)
        else:
            value = format_number(Fraction(a, 1 << n))
        return EvalResponse(
            expr=format_expr(expr), value=value, prec=n,
            work_prec=stats.work_prec, restarts=stats.restarts,
        )
