"""
Sequences, Cantor pairing and power-series evaluation
"""
import logging
import math
from fractions import Fraction
from typing import Callable, Iterator, Optional, Tuple

from ..errors import DomainError
from ..models.ball import Ball
from ..models.dyadic import Dyadic, HALF, ONE
from ..models.real import NodeKind, Real, add, const, const_rational, mul
from ..models.sequence import LimitData, RealSeq, SeriesData
from .ballarith import ball_add, ball_mul
from .evaluator import EvalConfig, approx, evaluate

logger = logging.getLogger(__name__)


def cantor_pair(j: int, m: int) -> int:
    """<j, m> = j + (j + m)(j + m + 1) / 2"""
    if j < 0 or m < 0:
        raise ValueError("pairing is defined on natural numbers")
    s = j + m
    return j + s * (s + 1) // 2


def cantor_unpair(n: int) -> Tuple[int, int]:
    """Exact inverse of cantor_pair"""
    if n < 0:
        raise ValueError("pairing is defined on natural numbers")
    w = (math.isqrt(8 * n + 1) - 1) // 2
    j = n - w * (w + 1) // 2
    return j, w - j


def seq_approx(s: RealSeq, j: int, m: int, cfg: Optional[EvalConfig] = None) -> int:
    """a_{j,m} with |x_j - a_{j,m} 2**-m| <= 2**-m"""
    return approx(s[j], m, cfg)


def seq_stream_element(s: RealSeq, n: int, cfg: Optional[EvalConfig] = None) -> int:
    j, m = cantor_unpair(n)
    return seq_approx(s, j, m, cfg)


def seq_stream(s: RealSeq, cfg: Optional[EvalConfig] = None, start: int = 0) -> Iterator[int]:
    """The double sequence a_{j,m} interleaved into one integer stream"""
    n = start
    while True:
        yield seq_stream_element(s, n, cfg)
        n += 1


# ----------------------------------------------------------------------
# Power series
# ----------------------------------------------------------------------

def series_eval(sd: SeriesData, x: Real) -> Real:
    """Lazy sum of c_j x**j for |x| <= r"""
    return Real(NodeKind.SERIES_EVAL, (x,), payload=sd)


def enclose_series(sd: SeriesData, x: Ball, p: int) -> Ball:
    """
    Horner evaluation of the degree-N truncation at working precision p

    N is chosen so the tail is at most 2**-(p+1); the tail is added to the
    radius afterwards.
    """
    if x.abs_lower() > sd.radius:
        raise DomainError(f"|x| exceeds the certified radius {sd.radius}")
    degree = sd.truncation_degree(p)
    wp = p + degree.bit_length() + 4
    acc = evaluate(sd.coeffs[degree], wp)
    for j in range(degree - 1, -1, -1):
        acc = ball_add(ball_mul(acc, x, wp), evaluate(sd.coeffs[j], wp), wp)
    return acc.widen(Dyadic(1, -p - 1))


def series_add(s1: SeriesData, s2: SeriesData) -> SeriesData:
    """Coefficientwise sum; A = A1 + A2, q and r the smaller ones"""
    a, b = s1.coeffs, s2.coeffs
    return SeriesData(
        coeffs=RealSeq(lambda j: add(a[j], b[j]), name=f"({a.name} + {b.name})"),
        bound_A=s1.bound_A + s2.bound_A,
        bound_q=min(s1.bound_q, s2.bound_q),
        radius=min(s1.radius, s2.radius),
    )


def _cauchy_term(a: RealSeq, b: RealSeq, j: int) -> Real:
    total = mul(a[0], b[j])
    for i in range(1, j + 1):
        total = add(total, mul(a[i], b[j - i]))
    return total


def series_mul(s1: SeriesData, s2: SeriesData) -> SeriesData:
    """
    Cauchy product; A = A1 A2, q the smaller one, radius halved

    Halving the radius absorbs the (j+1) terms of the convolution since
    (j+1) 2**-j <= 1.
    """
    a, b = s1.coeffs, s2.coeffs
    return SeriesData(
        coeffs=RealSeq(lambda j: _cauchy_term(a, b, j), name=f"({a.name} * {b.name})"),
        bound_A=s1.bound_A * s2.bound_A,
        bound_q=min(s1.bound_q, s2.bound_q),
        radius=min(s1.radius, s2.radius).half(),
    )


def geometric_series() -> SeriesData:
    """c_j = 1 on [-1/2, 1/2]; sums to 1/(1-x)"""
    return SeriesData(RealSeq(lambda j: const(1), name="geometric"), ONE, Dyadic(2), HALF)


def exp_series() -> SeriesData:
    """c_j = 1/j! on [-1, 1]; 2**j / j! <= 4 gives A = 4, q = 2"""
    return SeriesData(
        RealSeq(lambda j: const_rational(1, math.factorial(j)), name="exp"),
        Dyadic(4), Dyadic(2), ONE,
    )


def coefficient_series(coefficients, bound_A, bound_q, radius, name: str = "poly") -> SeriesData:
    """Series from a finite list of rational coefficients, zero beyond it"""
    values = [Fraction(c) for c in coefficients]

    def term(j: int) -> Real:
        if j < len(values):
            return const_rational(values[j].numerator, values[j].denominator)
        return const(0)

    return SeriesData(RealSeq(term, name=name), bound_A, bound_q, radius)


# ----------------------------------------------------------------------
# Limits
# ----------------------------------------------------------------------

def limit(seq: RealSeq, rate: Callable[[int], int]) -> Real:
    """x = lim x_j given rate(p) with |x_rate(p) - x| <= 2**-p"""
    return Real(NodeKind.LIMIT, payload=LimitData(seq, rate))


def enclose_limit(data: LimitData, p: int) -> Ball:
    index = data.rate(p + 1)
    return evaluate(data.seq[index], p).widen(Dyadic(1, -p - 1))
