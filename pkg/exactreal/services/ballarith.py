"""
Ball arithmetic at a working precision

Every rule returns a ball that contains the exact image of every point of
its input balls. Centers are rounded to p significant bits; the rounding
error and the propagated input radii go into the radius, which is rounded
upward to RADIUS_BITS bits. Radii are summed with Dyadic.add_ceiling, so
terms of very different magnitude never force an exact alignment.
"""
import math
from typing import Sequence, Tuple

from ..errors import DomainError, ExponentOverflow, NotSeparated, PromiseViolation, WideEnclosure
from ..models.ball import Ball, RADIUS_BITS
from ..models.dyadic import Dyadic, EXPONENT_MIN, ONE, ZERO
from .elementary import exp_fixed, guard_bits, ln_bounds


def sum_up(*terms: Dyadic) -> Dyadic:
    """Upper bound on a sum of non-negative terms, RADIUS_BITS wide"""
    total = ZERO
    for term in terms:
        total = Dyadic.add_ceiling(total, term, RADIUS_BITS)
    return total


def round_sum(a: Dyadic, b: Dyadic, p: int) -> Tuple[Dyadic, Dyadic]:
    """
    a + b rounded to p bits, with an upper bound on the error

    An addend more than p + 2 places below the other is dropped from the
    center and counted in the error.
    """
    if a and b:
        hi, lo = (a, b) if a.msb() >= b.msb() else (b, a)
        if lo.msb() < hi.msb() - p - 2:
            c, err = hi.round(p)
            return c, sum_up(err, Dyadic(1, lo.msb()))
    return (a + b).round(p)


def _finish(center: Dyadic, radius: Dyadic, p: int) -> Ball:
    c, err = center.round(p)
    return Ball(c, sum_up(radius, err))


def _finish_interval(lower: Dyadic, upper: Dyadic, p: int) -> Ball:
    hull = Ball.from_bounds(lower, upper)
    return _finish(hull.center, hull.radius, p)


def ball_neg(x: Ball, p: int) -> Ball:
    return _finish(-x.center, x.radius, p)


def ball_add(x: Ball, y: Ball, p: int) -> Ball:
    c, err = round_sum(x.center, y.center, p)
    return Ball(c, sum_up(x.radius, y.radius, err))


def ball_sub(x: Ball, y: Ball, p: int) -> Ball:
    c, err = round_sum(x.center, -y.center, p)
    return Ball(c, sum_up(x.radius, y.radius, err))


def ball_mul(x: Ball, y: Ball, p: int) -> Ball:
    radius = sum_up(abs(x.center) * y.radius, abs(y.center) * x.radius, x.radius * y.radius)
    return _finish(x.center * y.center, radius, p)


def ball_recip(x: Ball, p: int) -> Ball:
    """1/x; needs |center| > radius, otherwise NotSeparated"""
    if x.contains_zero():
        raise NotSeparated("reciprocal of a ball containing zero")
    c = x.center
    m = abs(c.mantissa)
    s = p + m.bit_length() + 2
    q = (1 << s) // m
    center = Dyadic(q if c.mantissa > 0 else -q, -s - c.exponent)
    err = Dyadic(1, -s - c.exponent)
    if x.radius:
        absc = abs(c)
        # lower bound on |c| - r
        gap = absc - x.radius if x.radius.msb() >= absc.msb() - p - 2 else absc.half()
        err = sum_up(err, Dyadic.div_ceiling(x.radius, absc * gap, RADIUS_BITS))
    return _finish(center, err, p)


def sqrt_floor(d: Dyadic, p: int, ceiling: bool = False) -> Dyadic:
    """Directed square root of d >= 0 with at least p significant bits"""
    if not d:
        return ZERO
    s = p + 2 - d.msb() // 2
    if d.exponent + 2 * s < 0:
        s = (1 - d.exponent) // 2
    n = d.mantissa << (d.exponent + 2 * s)
    r = math.isqrt(n)
    if ceiling and r * r != n:
        r += 1
    return Dyadic(r, -s)


def ball_sqrt(x: Ball, p: int) -> Ball:
    """Monotone endpoint enclosure, lower endpoint clamped at 0"""
    upper = x.upper
    if upper < 0:
        raise DomainError("square root of a negative number")
    lower = x.lower
    if lower < 0:
        lower = ZERO
    return _finish_interval(sqrt_floor(lower, p + 2), sqrt_floor(upper, p + 2, ceiling=True), p)


def _exp_upper(r: Dyadic) -> Dyadic:
    """Upper bound on e**r for r >= 0; 2**ceil(3r/2) once r > 1"""
    if r <= ONE:
        return ONE + r.shift(1)
    if r.msb() > 62:
        raise WideEnclosure("exp argument radius is beyond the exponent range")
    return Dyadic(1, (r * 3).scaled_ceiling(-1))


def _ball_pow(base: Ball, n: int, p: int) -> Ball:
    result = Ball.exact(ONE)
    while True:
        if n & 1:
            result = ball_mul(result, base, p)
        n >>= 1
        if not n:
            return result
        base = ball_mul(base, base, p)


def ball_exp(x: Ball, p: int) -> Ball:
    """
    e**x by integer range reduction x = k + u, |u| <= 1/2

    e**k comes from repeated squaring of an enclosure of e (or 1/e), e**u from
    the Taylor kernel; the input radius contributes e**(c+r) * r.
    """
    c = x.center
    if c and c.msb() > 65:
        # |c| >= 2**65
        if c < 0 and (not x.radius or x.radius.msb() < c.msb() - 1):
            return Ball(ZERO, Dyadic(1, EXPONENT_MIN))
        raise ExponentOverflow("exp argument is beyond the exponent range")
    k = c.scaled_nearest(0)
    u = c - k
    wp = guard_bits(p) + 2 * abs(k).bit_length()
    v, err = exp_fixed(u, wp)
    result = Ball(Dyadic(v, -wp), Dyadic(err, -wp))
    if k:
        vb, eb = exp_fixed(ONE if k > 0 else -ONE, wp)
        result = ball_mul(result, _ball_pow(Ball(Dyadic(vb, -wp), Dyadic(eb, -wp)), abs(k), wp), wp)
    radius = result.radius
    if x.radius:
        radius = sum_up(radius, result.abs_upper() * x.radius * _exp_upper(x.radius))
    return _finish(result.center, radius, p)


def ball_ln(x: Ball, p: int) -> Ball:
    """Natural logarithm by monotone endpoint evaluation"""
    if x.upper <= 0:
        raise DomainError("logarithm of a non-positive number")
    if x.lower <= 0:
        raise NotSeparated("logarithm of a ball reaching zero")
    lower, _ = ln_bounds(x.lower, p + 4)
    _, upper = ln_bounds(x.upper, p + 4)
    return _finish_interval(lower, upper, p)


def _hexp_endpoint(a: Dyadic, p: int, upward: bool) -> Dyadic:
    """Directed bound on 1/(1 - ln a) for 0 < a <= 1"""
    ln_lo, ln_hi = ln_bounds(a, p + 8)
    if upward:
        return Dyadic.div_ceiling(ONE, ONE - ln_hi, p + 8)
    return Dyadic.div_floor(ONE, ONE - ln_lo, p + 8)


def ball_hexp(x: Ball, p: int) -> Ball:
    """
    hexp(x) = 1/ln(e/x) = 1/(1 - ln x) on [0, 1], hexp(0) = 0

    hexp is increasing, so the enclosure comes from the endpoints. A ball that
    straddles 0 maps to [0, hexp(upper)].
    """
    lower, upper = x.lower, x.upper
    if lower > ONE or upper < 0:
        raise DomainError("hexp is defined on [0, 1] only")
    if upper > ONE:
        upper = ONE
    if upper <= 0:
        return Ball.exact(ZERO)
    low = _hexp_endpoint(lower, p, upward=False) if lower > 0 else ZERO
    return _finish_interval(low, _hexp_endpoint(upper, p, upward=True), p)


def check_lower_bound(x: Ball, k: int) -> None:
    """Best-effort check of the promise x >= 2**-k"""
    if x.upper < Dyadic(1, -k - 1):
        raise PromiseViolation(f"argument is below the promised lower bound 2^-{k}")


def ball_recip_enriched(x: Ball, p: int, k: int) -> Ball:
    check_lower_bound(x, k)
    return ball_recip(x, p)


_UNARY = {
    "neg": ball_neg,
    "recip": ball_recip,
    "sqrt": ball_sqrt,
    "exp": ball_exp,
    "ln": ball_ln,
    "hexp": ball_hexp,
}

_BINARY = {
    "add": ball_add,
    "sub": ball_sub,
    "mul": ball_mul,
}


def ball_step(kind: str, balls: Sequence[Ball], p: int, k: int = 0) -> Ball:
    """
    Apply one operation to child balls at working precision p

    Args:
        kind: neg, add, sub, mul, recip, recip_enriched, sqrt, exp, ln, hexp
        balls: Child enclosures, one per operand
        p: Working precision in bits
        k: Enrichment exponent for recip_enriched

    Returns:
        Enclosure of the operation over all points of the child balls
    """
    if kind in _BINARY:
        return _BINARY[kind](balls[0], balls[1], p)
    if kind in _UNARY:
        return _UNARY[kind](balls[0], p)
    if kind == "recip_enriched":
        return ball_recip_enriched(balls[0], p, k)
    raise ValueError(f"unknown ball operation: {kind}")
