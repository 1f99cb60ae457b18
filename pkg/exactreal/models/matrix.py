"""
Symmetric 2x2 matrices of exact reals
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .real import Real, coerce


@dataclass(frozen=True)
class SymMat2:
    """[[a11, a12], [a12, a22]]"""
    a11: Real
    a12: Real
    a22: Real

    @classmethod
    def from_rationals(cls, a11, a12, a22) -> "SymMat2":
        return cls(*(coerce(Fraction(v)) for v in (a11, a12, a22)))

    def apply(self, v: Tuple[Real, Real]) -> Tuple[Real, Real]:
        """M v"""
        v1, v2 = v
        return self.a11 * v1 + self.a12 * v2, self.a12 * v1 + self.a22 * v2

    def trace(self) -> Real:
        return self.a11 + self.a22

    def discriminant(self) -> Real:
        """(a11 - a22)**2 + 4 a12**2, zero exactly when both eigenvalues coincide"""
        d = self.a11 - self.a22
        return d * d + 4 * (self.a12 * self.a12)
