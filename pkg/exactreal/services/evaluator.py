"""
Evaluator: ball evaluation of Real DAGs under a precision-restart loop
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import get_settings
from ..errors import ExactRealError, ExponentOverflow, PassFailure, PrecisionExhausted, WideEnclosure
from ..models.ball import Ball
from ..models.dyadic import Dyadic
from ..models.real import NodeKind, Real
from .ballarith import ball_step

logger = logging.getLogger(__name__)

# Extra bits above the requested output precision on the first pass
GUARD_BITS = 32


class EvalConfig(BaseModel):
    """Working-precision schedule of the restart loop"""
    model_config = ConfigDict(frozen=True)

    initial_precision: int = Field(default=64, ge=2, description="Bits on the first pass")
    precision_growth: int = Field(default=2, ge=2, description="Multiplier applied on each restart")
    max_precision: int = Field(default=2 ** 24, ge=2, description="Cap on the working precision")

    @model_validator(mode="after")
    def check_cap(self) -> "EvalConfig":
        if self.max_precision < self.initial_precision:
            raise ValueError("max_precision must be at least initial_precision")
        return self

    @classmethod
    def from_settings(cls) -> "EvalConfig":
        settings = get_settings()
        return cls(
            initial_precision=settings.INITIAL_PREC,
            precision_growth=settings.PRECISION_GROWTH,
            max_precision=settings.MAX_PREC,
        )


@dataclass
class EvalStats:
    """What one approx call cost"""
    work_prec: int = 0
    restarts: int = 0
    from_cache: bool = False


def _enclose(node: Real, balls: List[Ball], p: int) -> Ball:
    kind = node.kind
    if kind is NodeKind.CONST:
        return Ball(node.payload)
    if kind is NodeKind.CONST_RATIONAL:
        value = node.payload
        s = p + 2
        q, r = divmod(value.numerator << s, value.denominator)
        return Ball(Dyadic(q, -s), Dyadic(1, -s) if r else Dyadic(0))
    if kind is NodeKind.LEAF_ORACLE:
        return node.payload.enclose(p)
    if kind is NodeKind.SERIES_EVAL:
        from .series import enclose_series
        return enclose_series(node.payload, balls[0], p)
    if kind is NodeKind.LIMIT:
        from .series import enclose_limit
        return enclose_limit(node.payload, p)
    if kind is NodeKind.RECIP_ENRICHED:
        return ball_step("recip_enriched", balls, p, k=node.payload)
    return ball_step(kind.value, balls, p)


def _check_width(node: Real, ball: Ball, p: int) -> None:
    """A ball wider than 2**p that also covers zero carries no information"""
    radius = ball.radius
    if radius and radius.msb() > p and radius >= abs(ball.center):
        raise WideEnclosure(f"{node.kind.value} enclosure is wider than 2^{p}")


def evaluate(root: Real, p: int, memo: Optional[Dict[int, Ball]] = None) -> Ball:
    """
    One pass over the DAG at working precision p

    Post-order walk with an explicit stack, so deep DAGs (long logistic
    iterations) do not hit the recursion limit. Shared subexpressions are
    evaluated once per pass.

    Raises:
        PassFailure: an intermediate ball could not be separated from zero,
            or grew wider than 2**p
    """
    memo = {} if memo is None else memo
    stack: List[Tuple[Real, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in memo:
            continue
        if node.children and not expanded:
            stack.append((node, True))
            for child in node.children:
                if id(child) not in memo:
                    stack.append((child, False))
            continue
        balls = [memo[id(child)] for child in node.children]
        ball = _enclose(node, balls, p)
        _check_width(node, ball, p)
        memo[id(node)] = node.offer(ball)
    return memo[id(root)]


def approx_with_stats(x: Real, n: int, cfg: Optional[EvalConfig] = None) -> Tuple[int, EvalStats]:
    """
    Integer a with |x - a * 2**-n| <= 2**-n, plus the cost of finding it

    A pass that fails (PassFailure, or an exponent leaving the machine range
    on the way) is retried at the next precision.

    Raises:
        PrecisionExhausted: the root ball was still too wide at max_precision
        ExponentOverflow: the pass at max_precision still overflowed
    """
    if n < 0:
        raise ValueError("precision n must be non-negative")
    cfg = cfg or EvalConfig.from_settings()
    target = Dyadic(1, -n - 1)
    stats = EvalStats()

    cached = x.cached
    if cached is not None and cached.radius <= target:
        stats.from_cache = True
        return cached.center.scaled_nearest(n), stats

    p = max(cfg.initial_precision, n + GUARD_BITS, n + x.enrich_bits + GUARD_BITS)
    p = min(p, cfg.max_precision)
    while True:
        stats.work_prec = p
        failure: Optional[ExactRealError] = None
        try:
            ball = evaluate(x, p)
        except (PassFailure, ExponentOverflow) as exc:
            logger.debug(f"pass at {p} bits failed: {exc}")
            ball, failure = None, exc
        if ball is not None and ball.radius <= target:
            return ball.center.scaled_nearest(n), stats
        if p >= cfg.max_precision:
            if isinstance(failure, ExponentOverflow):
                raise failure
            logger.warning(f"precision exhausted at {p} bits for n={n}")
            raise PrecisionExhausted(
                f"working precision would exceed {cfg.max_precision} bits", precision=p
            )
        stats.restarts += 1
        p = min(p * cfg.precision_growth, cfg.max_precision)
        logger.debug(f"restart {stats.restarts}: working precision {p} bits")


def approx(x: Real, n: int, cfg: Optional[EvalConfig] = None) -> int:
    return approx_with_stats(x, n, cfg)[0]


def approx_dyadic(x: Real, n: int, cfg: Optional[EvalConfig] = None) -> Dyadic:
    """approx as the dyadic a * 2**-n"""
    return Dyadic(approx(x, n, cfg), -n)


def _best_effort(x: Real, n: int, cfg: Optional[EvalConfig]) -> Ball:
    try:
        return Ball(approx_dyadic(x, n, cfg), Dyadic(1, -n))
    except PrecisionExhausted:
        if x.cached is None:
            raise
        return x.cached


def soft_compare(x: Real, y: Real, n: int, cfg: Optional[EvalConfig] = None) -> bool:
    """
    Multivalued test "x < y"

    True guarantees x < y + 2**-n, False guarantees y <= x + 2**-n. Inside
    the tie region either answer may come back, depending on what the
    operands have cached.

    When an operand cannot be resolved to 2**-(n+2) within the precision cap,
    its best cached enclosure is used instead: the answer is then decided by
    the centers and only guarantees what the two radii allow. PrecisionExhausted
    escapes only for an operand with no enclosure at all.
    """
    a = _best_effort(x, n + 2, cfg)
    b = _best_effort(y, n + 2, cfg)
    return a.center < b.center


def decimal_bits(digits: int) -> int:
    """Binary precision n with 2**-n <= 10**-digits / 4"""
    return (10 ** digits - 1).bit_length() + 2


def to_decimal(x: Real, digits: int, cfg: Optional[EvalConfig] = None) -> str:
    """
    Decimal string within 10**-digits of x

    Not correctly rounded: only the absolute error is guaranteed.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    n = decimal_bits(digits)
    a = approx(x, n, cfg)
    scaled = Dyadic(a * 10 ** digits, -n).scaled_nearest(0)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
