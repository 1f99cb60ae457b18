"""
Parametric maximum and indefinite integral of function oracles

Both algorithms sample a uniform grid whose spacing comes from the
modulus of continuity. The grid size is exponential in the modulus, which
is the expected cost for general continuous functions; grids above the
configured cap raise GridExplosion instead of hanging.
"""
import logging
from fractions import Fraction
from typing import Callable, Optional, Tuple

from ..config import get_settings
from ..errors import GridExplosion
from ..models.dyadic import Dyadic, ONE, ZERO
from ..models.oracle import FunctionOracle
from ..models.real import Real, const
from .evaluator import EvalConfig, approx

logger = logging.getLogger(__name__)

Domain = Tuple[Dyadic, Dyadic]
UNIT = (ZERO, ONE)


def lipschitz_modulus(lipschitz: int) -> Callable[[int], int]:
    """mu(n) = n + ceil(log2 L) for an L-Lipschitz function"""
    if lipschitz < 1:
        raise ValueError("Lipschitz constant must be at least 1")
    extra = (lipschitz - 1).bit_length()
    return lambda n: n + extra


def oracle_from_real_expr(
    builder: Callable[[Real], Real],
    modulus: Callable[[int], int],
    domain: Domain = UNIT,
    name: str = "f",
    cfg: Optional[EvalConfig] = None,
) -> FunctionOracle:
    """
    Oracle whose value at t is approx of builder(const(t))

    Args:
        builder: Maps the Real for t to the Real for f(t)
        modulus: Modulus of continuity (a user promise)
    """
    def evaluate(t: Dyadic, n: int) -> Dyadic:
        return Dyadic(approx(builder(const(t)), n, cfg), -n)

    return FunctionOracle(evaluate, modulus, domain, name)


def oracle_from_lipschitz(
    builder: Callable[[Real], Real],
    lipschitz: int,
    domain: Domain = UNIT,
    name: str = "f",
    cfg: Optional[EvalConfig] = None,
) -> FunctionOracle:
    return oracle_from_real_expr(builder, lipschitz_modulus(lipschitz), domain, name, cfg)


def oracle_from_rational(
    fn: Callable[[Fraction], Fraction],
    lipschitz: int,
    domain: Domain = UNIT,
    name: str = "f",
) -> FunctionOracle:
    """Oracle for a function that maps dyadic points to exact rationals"""
    def evaluate(t: Dyadic, n: int) -> Dyadic:
        value = Fraction(fn(t.to_fraction())) * (1 << n)
        return Dyadic(round(value), -n)

    return FunctionOracle(evaluate, lipschitz_modulus(lipschitz), domain, name)


def _check_grid(points: int, what: str, cap: Optional[int]) -> None:
    cap = cap or get_settings().GRID_CAP
    if points > cap:
        logger.warning(f"{what} grid of {points} points exceeds the cap of {cap}")
        raise GridExplosion(f"{what} needs {points} sample points (cap {cap})", points=points)


def max_param(F: FunctionOracle, x: Dyadic, n: int, grid_cap: Optional[int] = None) -> Dyadic:
    """
    max{f(t) : lower <= t <= x} to within 2**-n

    Samples the grid lower + i 2**-mu(n+2) up to x, plus x itself, at
    precision n + 2. Every t lies within the spacing of some sample, so the
    largest sample is within 2**-(n+1) of the true maximum.
    """
    x = F.check_domain(x)
    mu = F.modulus(n + 2)
    span = x - F.lower
    steps = span.scaled_floor(mu)
    _check_grid(steps + 2, "max", grid_cap)

    best = F(x, n + 2)
    for i in range(steps + 1):
        sample = F(F.lower + Dyadic(i, -mu), n + 2)
        if sample > best:
            best = sample
    return best


def integrate(F: FunctionOracle, x: Dyadic, n: int, grid_cap: Optional[int] = None) -> Dyadic:
    """
    Integral of f from lower to x to within 2**-n

    Uses 2**s equal panels of width at most 2**-mu(n+2+c), with
    c = ceil(log2(x - lower + 1)), and midpoint samples at precision n+2+c.
    The panel sum is exact; only the final quantization rounds.
    """
    x = F.check_domain(x)
    span = x - F.lower
    if not span:
        return ZERO
    c = (span + ONE).ceil_log2()
    mu = F.modulus(n + 2 + c)
    s = max(0, span.ceil_log2() + mu)
    panels = 1 << s
    _check_grid(panels, "integration", grid_cap)

    width = span.shift(-s)
    first = F.lower + width.half()
    total = ZERO
    for i in range(panels):
        total = total + F(first + width * i, n + 2 + c)
    return (total * width).quantize(-n - 3)
