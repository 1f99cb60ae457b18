"""
Logistic Map Service

Iterates x <- r x (1 - x) in exact real arithmetic, in exact rationals and in
several floating-point formats, so the divergence of the float modes from
the exact orbit can be observed.
"""
import logging
import time
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from ..config import get_settings
from ..errors import DomainError, StepExplosion
from ..models.real import Real, coerce
from ..schemas.logistic import LogisticMode, LogisticResult
from .evaluator import EvalConfig, to_decimal
from .parser import parse_number

logger = logging.getLogger(__name__)

# Working digits of the variable-precision mode
VPA_DIGITS = 32


def format_fraction(value: Fraction, digits: int) -> str:
    """value rounded to `digits` decimals, ties away from zero"""
    scaled = value * 10 ** digits
    whole = abs(scaled.numerator) * 2 + scaled.denominator
    rounded = whole // (2 * scaled.denominator)
    sign = "-" if value < 0 and rounded else ""
    ip, frac = divmod(rounded, 10 ** digits)
    return f"{sign}{ip}.{frac:0{digits}d}"


class LogisticMapService:
    """
    x_m for the logistic map in one of the LogisticMode arithmetics
    """

    @staticmethod
    def orbit_real(r: Fraction, x0: Fraction, steps: int) -> Real:
        """Lazy exact iterate; x is shared by both factors of every step"""
        rr = coerce(r)
        one = coerce(1)
        x = coerce(x0)
        for _ in range(steps):
            x = rr * x * (one - x)
        return x

    @staticmethod
    def orbit_rational(r: Fraction, x0: Fraction, steps: int, cap: Optional[int] = None) -> Fraction:
        cap = get_settings().RATIONAL_STEP_CAP if cap is None else cap
        if steps > cap:
            raise StepExplosion(f"rational mode is capped at {cap} steps", steps=steps)
        x = x0
        for _ in range(steps):
            x = r * x * (1 - x)
        return x

    @staticmethod
    def orbit_native(r: Fraction, x0: Fraction, steps: int, dtype) -> Fraction:
        """Native floating point of the given numpy type; exact value of the result"""
        rr = dtype(r.numerator) / dtype(r.denominator)
        x = dtype(x0.numerator) / dtype(x0.denominator)
        one = dtype(1)
        for _ in range(steps):
            x = rr * x * (one - x)
        return Fraction(*x.as_integer_ratio())

    @staticmethod
    def orbit_vpa(r: Fraction, x0: Fraction, steps: int, dps: int = VPA_DIGITS) -> Fraction:
        """Fixed-precision decimal-digit arithmetic"""
        with mpmath.workdps(dps):
            rr = mpmath.mpf(r.numerator) / r.denominator
            x = mpmath.mpf(x0.numerator) / x0.denominator
            for _ in range(steps):
                x = rr * x * (1 - x)
            man, exp = x.man_exp
        return Fraction(int(man)) * Fraction(2) ** int(exp)

    @staticmethod
    def run(
        steps: int,
        mode: LogisticMode = LogisticMode.EXACT,
        r: str = "15/4",
        x0: str = "1/2",
        digits: int = 10,
        cfg: Optional[EvalConfig] = None,
        rational_cap: Optional[int] = None,
    ) -> LogisticResult:
        """
        Iterate the map and format x_m

        Args:
            steps: Number of iterations m
            mode: Arithmetic to iterate in
            r: Parameter, 1 < r < 4
            x0: Start value in [0, 1]
            digits: Decimals in the printed value
            cfg: Precision schedule for exact mode
            rational_cap: Overrides the step cap of rational mode

        Returns:
            LogisticResult with the value and the elapsed time
        """
        mode = LogisticMode(mode)
        rv, xv = parse_number(r), parse_number(x0)
        if not 1 < rv < 4:
            raise DomainError(f"logistic parameter r={rv} must lie in (1, 4)")
        if not 0 <= xv <= 1:
            raise DomainError(f"start value x0={xv} must lie in [0, 1]")

        started = time.perf_counter()
        if mode is LogisticMode.EXACT:
            value = to_decimal(LogisticMapService.orbit_real(rv, xv, steps), digits, cfg)
        else:
            if mode is LogisticMode.RATIONAL:
                exact = LogisticMapService.orbit_rational(rv, xv, steps, rational_cap)
            elif mode is LogisticMode.F64:
                exact = LogisticMapService.orbit_native(rv, xv, steps, np.float64)
            elif mode is LogisticMode.F32:
                exact = LogisticMapService.orbit_native(rv, xv, steps, np.float32)
            elif mode is LogisticMode.LONGDOUBLE:
                exact = LogisticMapService.orbit_native(rv, xv, steps, np.longdouble)
            else:
                exact = LogisticMapService.orbit_vpa(rv, xv, steps)
            value = format_fraction(exact, digits)
        elapsed = time.perf_counter() - started

        budget = get_settings().LOGISTIC_BUDGET_S
        if elapsed > budget:
            logger.warning(f"logistic {mode.value} m={steps} took {elapsed:.1f}s, budget {budget}s")
        return LogisticResult(
            mode=mode, steps=steps, r=r, x0=x0, digits=digits,
            value=value, elapsed_s=elapsed, within_budget=elapsed <= budget,
        )
