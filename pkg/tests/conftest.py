"""
Shared fixtures for the acceptance suite
"""
from fractions import Fraction

import mpmath
import pytest

from exactreal.models.dyadic import Dyadic
from exactreal.services.evaluator import EvalConfig


@pytest.fixture
def cfg():
    return EvalConfig()


def within(a: int, n: int, value: Fraction) -> bool:
    """|value - a 2**-n| <= 2**-n, exactly"""
    return abs(Fraction(a) - value * 2 ** n) <= 1


def to_mpf(d: Dyadic) -> mpmath.mpf:
    return mpmath.ldexp(mpmath.mpf(d.mantissa), d.exponent)
