"""
Dyadic rationals

A Dyadic is the exact value mantissa * 2**exponent, kept in canonical form
(odd mantissa, or zero with exponent 0) so that equal values have equal
representations. All arithmetic on dyadics is exact; rounding only happens
through the explicit round/quantize helpers, which report their error.
"""
import math
import re
from enum import Enum
from fractions import Fraction
from typing import Tuple, Union

from ..errors import DomainError, ExponentOverflow, ParseError

EXPONENT_MIN = -(2 ** 63)
EXPONENT_MAX = 2 ** 63 - 1

_DYADIC_RE = re.compile(r"^\s*([+-]?\d+)\s*\*\s*2\s*\^\s*\(?\s*([+-]?\d+)\s*\)?\s*$")
_DECIMAL_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)\s*$")


class Ordering(str, Enum):
    """Result of an exact comparison"""
    LT = "LT"
    EQ = "EQ"
    GT = "GT"


def _shr_nearest(m: int, n: int) -> int:
    """m / 2**n rounded to nearest, ties away from zero (n >= 1)"""
    a = -m if m < 0 else m
    q = (a >> n) + ((a >> (n - 1)) & 1)
    return -q if m < 0 else q


def _shr_floor(m: int, n: int) -> int:
    return m >> n


def _shr_ceiling(m: int, n: int) -> int:
    return -((-m) >> n)


def _scale(m: int, shift: int, shr) -> int:
    if shift >= 0:
        return m << shift
    return shr(m, -shift)


class Dyadic:
    """Exact value mantissa * 2**exponent, immutable"""

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int = 0, exponent: int = 0):
        mantissa = int(mantissa)
        exponent = int(exponent)
        if mantissa:
            shift = (mantissa & -mantissa).bit_length() - 1
            if shift:
                mantissa >>= shift
                exponent += shift
            if not EXPONENT_MIN <= exponent <= EXPONENT_MAX:
                raise ExponentOverflow(f"dyadic exponent {exponent} exceeds machine width")
        else:
            exponent = 0
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.mantissa, self.exponent))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def coerce(cls, value: Union["Dyadic", int]) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to Dyadic")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        """Exact conversion; rejects denominators that are not powers of two"""
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise DomainError(f"{value} is not a dyadic rational")
        return cls(value.numerator, -(den.bit_length() - 1))

    @classmethod
    def from_float(cls, value: float) -> "Dyadic":
        """Exact conversion of a binary float"""
        if not math.isfinite(value):
            raise DomainError(f"{value!r} is not a finite number")
        return cls.from_fraction(Fraction(*float(value).as_integer_ratio()))

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """
        Parse "m*2^e", an integer, or a decimal literal

        Decimal literals are converted exactly; those that are not dyadic
        (e.g. "0.1") raise DomainError.
        """
        match = _DYADIC_RE.match(text)
        if match:
            return cls(int(match.group(1)), int(match.group(2)))
        if _DECIMAL_RE.match(text):
            return cls.from_fraction(Fraction(text.strip()))
        raise ParseError(f"not a dyadic literal: {text!r}", 0)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def bit_length(self) -> int:
        """Number of significant mantissa bits"""
        return abs(self.mantissa).bit_length()

    def msb(self) -> int:
        """Exponent g with 2**(g-1) <= |x| < 2**g (x nonzero)"""
        if not self.mantissa:
            raise ValueError("msb of zero")
        return self.exponent + self.bit_length()

    def ceil_log2(self) -> int:
        """Smallest g with |x| <= 2**g (x nonzero)"""
        if not self.mantissa:
            raise ValueError("log of zero")
        if abs(self.mantissa) == 1:
            return self.exponent
        return self.msb()

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.mantissa << self.exponent)
        return Fraction(self.mantissa, 1 << -self.exponent)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __bool__(self) -> bool:
        return self.mantissa != 0

    def __hash__(self) -> int:
        return hash((self.mantissa, self.exponent))

    def __repr__(self) -> str:
        return f"Dyadic({self.mantissa}, {self.exponent})"

    def __str__(self) -> str:
        return f"{self.mantissa}*2^{self.exponent}"

    # ------------------------------------------------------------------
    # Exact arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "Dyadic":
        other = Dyadic.coerce(other)
        if not other.mantissa:
            return self
        if not self.mantissa:
            return other
        if self.exponent <= other.exponent:
            return Dyadic(self.mantissa + (other.mantissa << (other.exponent - self.exponent)), self.exponent)
        return Dyadic(other.mantissa + (self.mantissa << (self.exponent - other.exponent)), other.exponent)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def __pos__(self) -> "Dyadic":
        return self

    def __abs__(self) -> "Dyadic":
        return self if self.mantissa >= 0 else -self

    def __sub__(self, other) -> "Dyadic":
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other) -> "Dyadic":
        return Dyadic.coerce(other) - self

    def __mul__(self, other) -> "Dyadic":
        other = Dyadic.coerce(other)
        return Dyadic(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Dyadic":
        """Exact multiplication by 2**k"""
        return Dyadic(self.mantissa, self.exponent + k) if self.mantissa else self

    def half(self) -> "Dyadic":
        return self.shift(-1)

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------

    def cmp(self, other) -> int:
        other = Dyadic.coerce(other)
        sa, sb = self.sign(), other.sign()
        if sa != sb:
            return (sa > sb) - (sa < sb)
        if sa == 0:
            return 0
        ma, mb = self.msb(), other.msb()
        if ma != mb:
            return sa if ma > mb else -sa
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self.mantissa == other.mantissa and self.exponent == other.exponent
        if isinstance(other, int):
            return self.cmp(other) == 0
        return NotImplemented

    def __lt__(self, other) -> bool:
        return self.cmp(other) < 0

    def __le__(self, other) -> bool:
        return self.cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self.cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self.cmp(other) >= 0

    # ------------------------------------------------------------------
    # Rounding
    # ------------------------------------------------------------------

    def round(self, p: int) -> Tuple["Dyadic", "Dyadic"]:
        """
        Round to at most p significant bits, nearest with ties away from zero

        Returns:
            (rounded value, exact |rounded - self|)
        """
        if p < 1:
            raise ValueError("precision must be at least 1 bit")
        n = self.bit_length() - p
        if n <= 0:
            return self, ZERO
        d = Dyadic(_shr_nearest(self.mantissa, n), self.exponent + n)
        return d, abs(d - self)

    def round_floor(self, p: int) -> "Dyadic":
        """Largest p-bit dyadic <= self"""
        n = self.bit_length() - p
        if n <= 0:
            return self
        return Dyadic(_shr_floor(self.mantissa, n), self.exponent + n)

    def round_ceiling(self, p: int) -> "Dyadic":
        """Smallest p-bit dyadic >= self"""
        n = self.bit_length() - p
        if n <= 0:
            return self
        return Dyadic(_shr_ceiling(self.mantissa, n), self.exponent + n)

    def scaled_nearest(self, n: int) -> int:
        """Nearest integer to self * 2**n, ties away from zero"""
        return _scale(self.mantissa, self.exponent + n, _shr_nearest)

    def scaled_floor(self, n: int) -> int:
        return _scale(self.mantissa, self.exponent + n, _shr_floor)

    def scaled_ceiling(self, n: int) -> int:
        return _scale(self.mantissa, self.exponent + n, _shr_ceiling)

    def quantize(self, e: int) -> "Dyadic":
        """Nearest multiple of 2**e; the error is at most 2**(e-1)"""
        if self.exponent >= e:
            return self
        return Dyadic(self.scaled_nearest(-e), e)

    @staticmethod
    def div_ceiling(a: "Dyadic", b: "Dyadic", bits: int = 32) -> "Dyadic":
        """Upper bound on a / b with about `bits` significant bits (a >= 0, b > 0)"""
        return Dyadic._divide(a, b, bits, ceiling=True)

    @staticmethod
    def div_floor(a: "Dyadic", b: "Dyadic", bits: int = 32) -> "Dyadic":
        """Lower bound on a / b with about `bits` significant bits (a >= 0, b > 0)"""
        return Dyadic._divide(a, b, bits, ceiling=False)

    @staticmethod
    def add_ceiling(a: "Dyadic", b: "Dyadic", bits: int = 32) -> "Dyadic":
        """
        Upper bound on a + b (a, b >= 0) with about `bits` significant bits

        An operand more than bits + 2 binary places below the other counts
        as one unit in the last place of the larger, so operands with far
        apart exponents are never aligned.
        """
        if a.mantissa < 0 or b.mantissa < 0:
            raise ValueError("add_ceiling needs a >= 0 and b >= 0")
        if not b.mantissa:
            return a.round_ceiling(bits)
        if not a.mantissa:
            return b.round_ceiling(bits)
        hi, lo = (a, b) if a.msb() >= b.msb() else (b, a)
        if lo.msb() < hi.msb() - bits - 2:
            hi = hi.round_ceiling(bits)
            return (hi + Dyadic(1, hi.msb() - bits)).round_ceiling(bits)
        return (a + b).round_ceiling(bits)

    @staticmethod
    def _divide(a: "Dyadic", b: "Dyadic", bits: int, ceiling: bool) -> "Dyadic":
        if b.mantissa <= 0 or a.mantissa < 0:
            raise ValueError("directed division needs a >= 0 and b > 0")
        if not a.mantissa:
            return ZERO
        s = max(0, bits + b.bit_length() - a.bit_length() + 1)
        q, r = divmod(a.mantissa << s, b.mantissa)
        if ceiling and r:
            q += 1
        return Dyadic(q, a.exponent - b.exponent - s)


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, -1)
TWO = Dyadic(1, 1)


def dyadic_arith(op: str, a: Dyadic, b: Dyadic) -> Dyadic:
    """
    Exact add, sub or mul of two dyadics

    Args:
        op: One of "add", "sub", "mul"

    Returns:
        The exact canonical result
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unsupported dyadic operation: {op}")


def dyadic_round(a: Dyadic, p: int) -> Tuple[Dyadic, Dyadic]:
    """Round to p bits, returning (value, error bound)"""
    return a.round(p)


def dyadic_cmp(a: Dyadic, b: Dyadic) -> Ordering:
    c = a.cmp(b)
    if c < 0:
        return Ordering.LT
    if c > 0:
        return Ordering.GT
    return Ordering.EQ
