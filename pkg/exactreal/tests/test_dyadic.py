"""
Unit tests for Dyadic
"""
import random
from fractions import Fraction

import pytest

from exactreal.errors import DomainError, ExponentOverflow, ParseError
from exactreal.models.dyadic import (
    Dyadic,
    HALF,
    ONE,
    Ordering,
    ZERO,
    dyadic_arith,
    dyadic_cmp,
    dyadic_round,
)


class TestCanonicalForm:
    """Tests for construction and normalization"""

    def test_even_mantissa_is_normalized(self):
        """Trailing zero bits move into the exponent"""
        d = Dyadic(12, 0)
        assert (d.mantissa, d.exponent) == (3, 2)

    def test_zero_has_exponent_zero(self):
        """Every zero is the same zero"""
        assert Dyadic(0, 17) == ZERO
        assert Dyadic(0, -5).exponent == 0

    def test_equal_values_equal_hashes(self):
        """Different spellings of one value hash alike"""
        assert Dyadic(4, -3) == HALF
        assert hash(Dyadic(4, -3)) == hash(HALF)
        assert len({Dyadic(2, 0), Dyadic(1, 1), Dyadic(8, -2)}) == 1

    def test_immutable(self):
        """Attributes cannot be reassigned"""
        with pytest.raises(AttributeError):
            ONE.mantissa = 3

    def test_exponent_overflow(self):
        """Exponents beyond signed 64 bits are fatal"""
        with pytest.raises(ExponentOverflow):
            Dyadic(1, 2 ** 63)
        with pytest.raises(OverflowError):
            Dyadic(1, -(2 ** 63) - 1)

    def test_from_fraction_exact(self):
        """Dyadic fractions convert exactly"""
        assert Dyadic.from_fraction(Fraction(-3, 8)) == Dyadic(-3, -3)

    def test_from_fraction_rejects_thirds(self):
        """1/3 has no dyadic representation"""
        with pytest.raises(DomainError):
            Dyadic.from_fraction(Fraction(1, 3))

    def test_from_float_is_exact(self):
        """0.1 converts to the exact binary value of the float"""
        assert Dyadic.from_float(0.1).to_fraction() == Fraction(0.1)

    def test_from_float_rejects_nan(self):
        """Non-finite floats are a domain error"""
        with pytest.raises(DomainError):
            Dyadic.from_float(float("nan"))


class TestParse:
    """Tests for the m*2^e text form"""

    def test_text_form(self):
        """str gives m*2^e"""
        assert str(Dyadic(3, -2)) == "3*2^-2"

    def test_parse_dyadic_literal(self):
        """m*2^e with and without parentheses"""
        assert Dyadic.parse("3*2^-2") == Dyadic(3, -2)
        assert Dyadic.parse("-5 * 2^(3)") == Dyadic(-40)

    def test_parse_decimal(self):
        """Terminating binary decimals are accepted"""
        assert Dyadic.parse("0.375") == Dyadic(3, -3)
        assert Dyadic.parse("12") == Dyadic(12)

    def test_parse_rejects_non_dyadic_decimal(self):
        """0.1 is rational but not dyadic"""
        with pytest.raises(DomainError):
            Dyadic.parse("0.1")

    def test_parse_rejects_garbage(self):
        """Anything else is a parse error"""
        with pytest.raises(ParseError):
            Dyadic.parse("two")


class TestArithmetic:
    """Tests for exact arithmetic"""

    def test_add_sub_mul(self):
        """Results are exact"""
        a, b = Dyadic(3, -2), Dyadic(5, 1)
        assert (a + b).to_fraction() == Fraction(3, 4) + 10
        assert (a - b).to_fraction() == Fraction(3, 4) - 10
        assert (a * b).to_fraction() == Fraction(30, 4)

    def test_dyadic_arith_dispatch(self):
        """dyadic_arith names the operation"""
        a, b = Dyadic(7, -3), Dyadic(1, -1)
        assert dyadic_arith("add", a, b) == Dyadic(11, -3)
        assert dyadic_arith("sub", a, b) == Dyadic(3, -3)
        assert dyadic_arith("mul", a, b) == Dyadic(7, -4)
        with pytest.raises(ValueError):
            dyadic_arith("div", a, b)

    def test_int_operands(self):
        """Plain ints mix with dyadics"""
        assert HALF + 1 == Dyadic(3, -1)
        assert 1 - HALF == HALF
        assert 2 * HALF == ONE

    def test_shift(self):
        """shift multiplies by a power of two"""
        assert Dyadic(3).shift(-4) == Dyadic(3, -4)
        assert ZERO.shift(10) == ZERO

    def test_msb_and_ceil_log2(self):
        """2**(g-1) <= |x| < 2**g and the smallest g with |x| <= 2**g"""
        assert Dyadic(3).msb() == 2
        assert Dyadic(4).msb() == 3
        assert Dyadic(4).ceil_log2() == 2
        assert Dyadic(3).ceil_log2() == 2
        assert Dyadic(-3, -4).ceil_log2() == -2


class TestComparison:
    """Tests for exact comparison"""

    def test_ordering(self):
        """dyadic_cmp returns the three-way ordering"""
        assert dyadic_cmp(HALF, ONE) is Ordering.LT
        assert dyadic_cmp(ONE, HALF) is Ordering.GT
        assert dyadic_cmp(Dyadic(2, -2), HALF) is Ordering.EQ

    def test_signs_and_magnitudes(self):
        """Negative numbers order before positive ones"""
        assert Dyadic(-1, 10) < Dyadic(1, -10)
        assert Dyadic(-3) < Dyadic(-1)
        assert Dyadic(5, -1) > 2

    def test_equality_with_int(self):
        """Integer-valued dyadics compare equal to ints"""
        assert Dyadic(4, -2) == 1
        assert Dyadic(3, -1) != 1


class TestRounding:
    """Tests for the rounding helpers"""

    def test_round_ties_away_from_zero(self):
        """11 to 3 bits is 12, -11 is -12, each with error 1"""
        assert dyadic_round(Dyadic(11), 3) == (Dyadic(12), ONE)
        assert Dyadic(-11).round(3) == (Dyadic(-12), ONE)

    def test_round_error_is_exact(self):
        """The reported error is |rounded - x|"""
        x = Dyadic(0b101101101, -20)
        d, err = x.round(4)
        assert err == abs(d - x)
        assert d.bit_length() <= 4

    def test_round_short_value_untouched(self):
        """Values with few bits round to themselves"""
        assert Dyadic(5).round(8) == (Dyadic(5), ZERO)

    def test_round_rejects_zero_bits(self):
        """p must be positive"""
        with pytest.raises(ValueError):
            ONE.round(0)

    def test_directed_rounding(self):
        """Floor and ceiling bracket the value"""
        assert Dyadic(11).round_floor(2) == Dyadic(8)
        assert Dyadic(11).round_ceiling(2) == Dyadic(12)
        assert Dyadic(-11).round_floor(2) == Dyadic(-12)

    def test_scaled_nearest(self):
        """Nearest integer to x 2**n, ties away from zero"""
        assert HALF.scaled_nearest(0) == 1
        assert (-HALF).scaled_nearest(0) == -1
        assert Dyadic(3, -2).scaled_nearest(0) == 1
        assert Dyadic(3, -2).scaled_nearest(3) == 6

    def test_quantize(self):
        """quantize(e) moves to the nearest multiple of 2**e"""
        assert Dyadic(3, -3).quantize(-1) == HALF
        assert Dyadic(5).quantize(-4) == Dyadic(5)

    def test_directed_division(self):
        """div_floor <= a/b <= div_ceiling, both within 2**-bits relative"""
        lo = Dyadic.div_floor(ONE, Dyadic(3), 8)
        hi = Dyadic.div_ceiling(ONE, Dyadic(3), 8)
        third = Fraction(1, 3)
        assert lo.to_fraction() <= third <= hi.to_fraction()
        assert hi.to_fraction() - lo.to_fraction() <= Fraction(1, 256)

    def test_directed_division_rejects_negative_divisor(self):
        """The divisor must be positive"""
        with pytest.raises(ValueError):
            Dyadic.div_ceiling(ONE, Dyadic(-1))


def random_dyadic(rng: random.Random, bits: int = 80, spread: int = 200) -> Dyadic:
    return Dyadic(rng.randint(-(1 << bits), 1 << bits), rng.randint(-spread, spread))


class TestRandomized:
    """Properties over random operands, against exact Fraction arithmetic"""

    @pytest.mark.parametrize("op", ["add", "sub", "mul"])
    def test_arith_matches_fractions(self, op):
        """dyadic_arith agrees with Fraction arithmetic"""
        rng = random.Random(op)
        apply = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b, "mul": lambda a, b: a * b}[op]
        for _ in range(2000):
            a, b = random_dyadic(rng), random_dyadic(rng)
            assert dyadic_arith(op, a, b).to_fraction() == apply(a.to_fraction(), b.to_fraction())

    def test_canonical_form_is_idempotent(self):
        """Rebuilding from the stored fields, or from an unnormalized pair, gives the same value"""
        rng = random.Random(3)
        for _ in range(2000):
            d = random_dyadic(rng)
            assert Dyadic(d.mantissa, d.exponent) == d
            assert d.mantissa % 2 == 1 or (d.mantissa == 0 and d.exponent == 0)
            k = rng.randint(0, 64)
            assert Dyadic(d.mantissa << k, d.exponent - k) == d

    def test_round_reports_true_error(self):
        """The returned error is at least the true error, and p bits are kept"""
        rng = random.Random(5)
        for _ in range(2000):
            a = random_dyadic(rng)
            p = rng.randint(1, 90)
            rounded, err = dyadic_round(a, p)
            assert rounded.bit_length() <= p
            assert abs(rounded.to_fraction() - a.to_fraction()) <= err.to_fraction()
            assert a.round_floor(p) <= a <= a.round_ceiling(p)

    def test_add_ceiling_bounds_sum(self):
        """add_ceiling lies within 2**-(bits-3) relative above the exact sum"""
        rng = random.Random(11)
        for _ in range(2000):
            a, b = abs(random_dyadic(rng)), abs(random_dyadic(rng))
            exact = a.to_fraction() + b.to_fraction()
            bound = Dyadic.add_ceiling(a, b, 30).to_fraction()
            assert exact <= bound <= exact * (1 + Fraction(1, 2 ** 27))

    def test_add_ceiling_far_apart(self):
        """A term 2**40 places below counts as one unit in the last place"""
        big = Dyadic(1, 2 ** 40)
        assert Dyadic.add_ceiling(big, ONE, 30) == Dyadic((1 << 29) + 1, 2 ** 40 - 29)
        assert Dyadic.add_ceiling(ZERO, ZERO, 30) == ZERO
        with pytest.raises(ValueError):
            Dyadic.add_ceiling(ONE, -ONE)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
