"""
Fixed-point kernels for exp and ln

Values are plain integers v scaled by 2**wp, each returned together with an
error count err such that |f(x) - v * 2**-wp| <= err * 2**-wp. All divisions
truncate toward zero so term sequences reach zero.
"""
from typing import Tuple

from ..models.dyadic import Dyadic


def _tdiv(a: int, b: int) -> int:
    return -((-a) // b) if a < 0 else a // b


def _tshr(a: int, n: int) -> int:
    return -((-a) >> n) if a < 0 else a >> n


def exp_fixed(u: Dyadic, wp: int) -> Tuple[int, int]:
    """
    Taylor series for e**u, valid for |u| <= 1

    Each computed term is within 4 ulp of the true term; summation stops when
    a term truncates to zero, after which the remaining tail is below 10 ulp.
    """
    one = 1 << wp
    big_u = u.scaled_nearest(wp)
    if abs(big_u) > one:
        raise ValueError("exp_fixed needs |u| <= 1")
    term = one
    total = one
    j = 0
    while True:
        j += 1
        term = _tdiv(_tshr(term * big_u, wp), j)
        if not term:
            break
        total += term
    return total, 4 * j + 16


def atanh_fixed(z: int, wp: int) -> Tuple[int, int]:
    """atanh(z * 2**-wp) for 0 <= z <= 2**wp / 3"""
    z2 = (z * z) >> wp
    power = z
    total = 0
    k = 1
    terms = 0
    while power:
        total += power // k
        power = (power * z2) >> wp
        k += 2
        terms += 1
    return total, 4 * terms + 4


def ln2_fixed(wp: int) -> Tuple[int, int]:
    """ln 2 = 2 atanh(1/3)"""
    s, err = atanh_fixed((1 << wp) // 3, wp)
    return 2 * s, 2 * (err + 2)


def ln_fixed(a: Dyadic, wp: int) -> Tuple[int, int]:
    """
    Natural logarithm of a positive dyadic

    Reduces a = y * 2**s with y in [1, 2) and uses ln y = 2 atanh((y-1)/(y+1)).
    """
    if a.sign() <= 0:
        raise ValueError("ln_fixed needs a positive argument")
    s = a.msb() - 1
    one = 1 << wp
    y = a.shift(-s).scaled_floor(wp)
    z = ((y - one) << wp) // (y + one)
    atanh, err = atanh_fixed(z, wp)
    value = 2 * atanh
    err = 2 * (err + 3)
    if s:
        l2, err2 = ln2_fixed(wp)
        value += s * l2
        err += abs(s) * err2
    return value, err


def guard_bits(p: int, scale: int = 0) -> int:
    """Working precision for a kernel whose error grows with p and |scale|"""
    return p + 2 * p.bit_length() + abs(scale).bit_length() + 12


def exp_bounds(u: Dyadic, p: int) -> Tuple[Dyadic, Dyadic]:
    wp = guard_bits(p)
    v, err = exp_fixed(u, wp)
    return Dyadic(v - err, -wp), Dyadic(v + err, -wp)


def ln_bounds(a: Dyadic, p: int) -> Tuple[Dyadic, Dyadic]:
    """Lower and upper dyadic bounds on ln a, absolute error about 2**-p"""
    wp = guard_bits(p, a.msb())
    v, err = ln_fixed(a, wp)
    return Dyadic(v - err, -wp), Dyadic(v + err, -wp)
