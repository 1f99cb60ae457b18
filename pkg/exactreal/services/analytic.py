"""
Calculus on analytic functions given by Taylor data

Evaluation, differentiation, integration, sum and product work on the
coefficient sequence and update the derivative-bound parameters (B, ell);
maximization is a branch-and-bound search driven by the Lipschitz bound
2B/r on the certified interval.
"""
import heapq
import logging
from fractions import Fraction
from typing import Optional

from ..config import get_settings
from ..errors import DomainError, GridExplosion
from ..models.dyadic import Dyadic
from ..models.oracle import AnalyticFn, E_UPPER
from ..models.real import Real, add, const, const_rational, mul
from ..models.sequence import RealSeq
from .evaluator import EvalConfig, approx
from .series import series_eval

logger = logging.getLogger(__name__)


def _scaled(x: Real, factor: Fraction) -> Real:
    """factor * x, folded when x is a constant"""
    value = x.as_fraction()
    if value is not None:
        value = value * factor
        return const_rational(value.numerator, value.denominator)
    return mul(const_rational(factor.numerator, factor.denominator), x)


def analytic_from_coefficients(coefficients, B: int, ell: int, center=0, name: str = "g") -> AnalyticFn:
    """AnalyticFn with finitely many rational coefficients, zero beyond them"""
    values = [Fraction(c) for c in coefficients]

    def term(j: int) -> Real:
        if j < len(values):
            return const_rational(values[j].numerator, values[j].denominator)
        return const(0)

    return AnalyticFn(RealSeq(term, name=name), Dyadic.coerce(center), B, ell)


def analytic_real(g: AnalyticFn, x: Real) -> Real:
    """Lazy g(x); the node checks |x - center| <= r softly when evaluated"""
    return series_eval(g.series, x - const(g.center))


def analytic_eval(g: AnalyticFn, x: Real, n: int, cfg: Optional[EvalConfig] = None) -> int:
    """a with |g(x) - a 2**-n| <= 2**-n"""
    return approx(analytic_real(g, x), n, cfg)


def analytic_diff(g: AnalyticFn) -> AnalyticFn:
    """
    Derivative: c'_j = (j+1) c_{j+1}

    From (j+1) <= 2**j, |c'_j| <= B e l (2 e l)**j, so the new parameters are
    (ceil(B e l), 2 l) and the certified radius halves.
    """
    c = g.coeffs
    coeffs = RealSeq(lambda j: _scaled(c[j + 1], Fraction(j + 1)), name=f"d({c.name})")
    B = (E_UPPER * (g.B * g.ell)).scaled_ceiling(0)
    return AnalyticFn(coeffs, g.center, B, 2 * g.ell)


def analytic_integrate(g: AnalyticFn) -> AnalyticFn:
    """Antiderivative vanishing at the center; (B, ell) unchanged"""
    c = g.coeffs

    def term(j: int) -> Real:
        if j == 0:
            return const(0)
        return _scaled(c[j - 1], Fraction(1, j))

    return AnalyticFn(RealSeq(term, name=f"int({c.name})"), g.center, g.B, g.ell)


def _same_center(g1: AnalyticFn, g2: AnalyticFn) -> None:
    if g1.center != g2.center:
        raise DomainError("analytic functions must share their expansion center")


def analytic_add(g1: AnalyticFn, g2: AnalyticFn) -> AnalyticFn:
    """Sum; parameters (B1 + B2, max ell)"""
    _same_center(g1, g2)
    a, b = g1.coeffs, g2.coeffs
    coeffs = RealSeq(lambda j: add(a[j], b[j]), name=f"({a.name} + {b.name})")
    return AnalyticFn(coeffs, g1.center, g1.B + g2.B, max(g1.ell, g2.ell))


def analytic_mul(g1: AnalyticFn, g2: AnalyticFn) -> AnalyticFn:
    """Cauchy product; parameters (B1 B2, 2 max ell)"""
    _same_center(g1, g2)
    a, b = g1.coeffs, g2.coeffs

    def term(j: int) -> Real:
        total = mul(a[0], b[j])
        for i in range(1, j + 1):
            total = add(total, mul(a[i], b[j - i]))
        return total

    coeffs = RealSeq(term, name=f"({a.name} * {b.name})")
    return AnalyticFn(coeffs, g1.center, g1.B * g2.B, 2 * max(g1.ell, g2.ell))


def analytic_max(
    g: AnalyticFn,
    lower: Dyadic,
    upper: Dyadic,
    n: int,
    cfg: Optional[EvalConfig] = None,
    max_splits: Optional[int] = None,
) -> Dyadic:
    """
    max of g on [lower, upper] to within 2**-n by branch and bound

    Each subinterval is bounded above by g(mid) + Lambda * halfwidth with
    Lambda = 2B/r; the best sample bounds the maximum from below. The
    subinterval with the largest upper bound is split until the gap between
    both bounds is at most 2**-n; the midpoint of the gap is returned.
    """
    lower, upper = Dyadic.coerce(lower), Dyadic.coerce(upper)
    lo_cert, hi_cert = g.interval()
    if upper < lower:
        raise ValueError("empty interval")
    if lower < lo_cert or upper > hi_cert:
        raise DomainError(f"[{lower}, {upper}] leaves the certified interval [{lo_cert}, {hi_cert}]")

    m = n + 3
    slack = Dyadic(1, -m)
    lam = Dyadic(g.lipschitz)
    max_splits = max_splits or get_settings().GRID_CAP

    def sample(t: Dyadic) -> Dyadic:
        return Dyadic(analytic_eval(g, const(t), m, cfg), -m)

    best = max(sample(lower), sample(upper)) - slack
    heap = []
    counter = 0

    def push(a: Dyadic, b: Dyadic) -> None:
        nonlocal best, counter
        mid = (a + b).half()
        value = sample(mid)
        if value - slack > best:
            best = value - slack
        bound = value + slack + lam * (b - a).half()
        counter += 1
        heapq.heappush(heap, (-bound.to_fraction(), counter, bound, a, b))

    push(lower, upper)
    splits = 0
    gap_target = Dyadic(1, -n)
    while True:
        _, _, bound, a, b = heap[0]
        if bound - best <= gap_target:
            return (bound + best).half()
        heapq.heappop(heap)
        splits += 1
        if splits > max_splits:
            logger.warning(f"analytic_max gave up after {splits} splits")
            raise GridExplosion(f"branch and bound exceeded {max_splits} splits", points=splits)
        mid = (a + b).half()
        push(a, mid)
        push(mid, b)
