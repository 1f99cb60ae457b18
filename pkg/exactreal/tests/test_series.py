"""
Unit tests for sequences, Cantor pairing, series and limits
"""
import pytest
from fractions import Fraction

import mpmath

from exactreal.errors import DomainError
from exactreal.models.dyadic import Dyadic, HALF, ONE
from exactreal.models.real import const, const_rational, exp
from exactreal.models.sequence import RealSeq, SeriesData
from exactreal.services.evaluator import approx
from exactreal.services.series import (
    cantor_pair,
    cantor_unpair,
    coefficient_series,
    exp_series,
    geometric_series,
    limit,
    seq_approx,
    seq_stream,
    seq_stream_element,
    series_add,
    series_eval,
    series_mul,
)

mpmath.mp.prec = 400


def harmonic() -> RealSeq:
    return RealSeq(lambda j: const_rational(1, j + 1), name="1/(j+1)")


class TestCantorPairing:
    """Tests for the pairing of index and precision"""

    def test_first_values(self):
        """<0,0> = 0, <0,1> = 1, <1,0> = 2"""
        assert cantor_pair(0, 0) == 0
        assert cantor_pair(0, 1) == 1
        assert cantor_pair(1, 0) == 2
        assert cantor_pair(2, 3) == 17

    def test_unpair_inverts(self):
        """unpair(pair(j, m)) = (j, m) on a sample including large values"""
        for j, m in [(0, 0), (5, 9), (123, 4), (10 ** 20, 7)]:
            assert cantor_unpair(cantor_pair(j, m)) == (j, m)

    def test_negative_rejected(self):
        """Natural numbers only"""
        with pytest.raises(ValueError):
            cantor_pair(-1, 0)
        with pytest.raises(ValueError):
            cantor_unpair(-1)


class TestRealSeq:
    """Tests for sequences of reals"""

    def test_memoized_terms(self):
        """The callback runs once per index"""
        calls = []

        def term(j):
            calls.append(j)
            return const(j)

        s = RealSeq(term)
        assert s[3] is s[3]
        assert calls == [3]

    def test_negative_index(self):
        """Indices are natural numbers"""
        with pytest.raises(IndexError):
            harmonic()[-1]

    def test_seq_approx(self, cfg):
        """a_{j,m} approximates x_j to 2**-m"""
        a = seq_approx(harmonic(), 2, 30, cfg)
        assert abs(Fraction(a, 2 ** 30) - Fraction(1, 3)) <= Fraction(1, 2 ** 30)

    def test_stream_matches_pairing(self, cfg):
        """Element n of the stream is a_{unpair(n)}"""
        s = harmonic()
        stream = seq_stream(s, cfg)
        for n in range(30):
            j, m = cantor_unpair(n)
            value = next(stream)
            assert value == seq_stream_element(s, n, cfg)
            assert abs(Fraction(value, 2 ** m) - Fraction(1, j + 1)) <= Fraction(1, 2 ** m)


class TestSeriesData:
    """Tests for the tail data"""

    def test_validation(self):
        """A > 0, q > 1, r > 0"""
        coeffs = RealSeq(lambda j: const(1))
        with pytest.raises(ValueError):
            SeriesData(coeffs, 0, 2, HALF)
        with pytest.raises(ValueError):
            SeriesData(coeffs, 1, 1, HALF)
        with pytest.raises(ValueError):
            SeriesData(coeffs, 1, 2, 0)

    def test_truncation_degree_geometric(self):
        """A = 1, q = 2: the tail after N terms is 2**-N"""
        assert geometric_series().truncation_degree(10) == 11

    def test_truncation_degree_grows_with_A(self):
        """Larger A needs more terms"""
        small = geometric_series()
        large = SeriesData(small.coeffs, Dyadic(1, 20), Dyadic(2), HALF)
        assert large.truncation_degree(10) == small.truncation_degree(10) + 20


class TestSeriesEval:
    """Tests for power-series evaluation"""

    @pytest.mark.parametrize("n", [0, 10, 100, 500])
    def test_geometric_at_half(self, n, cfg):
        """1 + 1/2 + 1/4 + ... = 2"""
        a = approx(series_eval(geometric_series(), const(HALF)), n, cfg)
        assert abs(Fraction(a, 2 ** n) - 2) <= Fraction(1, 2 ** n)

    def test_exp_series_at_one(self, cfg):
        """The exp series at 1 is e"""
        a = approx(series_eval(exp_series(), const(ONE)), 200, cfg)
        assert abs(mpmath.mpf(a) / mpmath.mpf(2) ** 200 - mpmath.e) <= mpmath.mpf(2) ** -200

    def test_exp_series_agrees_with_exp(self, cfg):
        """Series and exp node give the same integer up to one unit"""
        x = const(Dyadic(-3, -2))
        a = approx(series_eval(exp_series(), x), 100, cfg)
        b = approx(exp(x), 100, cfg)
        assert abs(a - b) <= 2

    def test_outside_radius(self, cfg):
        """|x| > r is a domain error"""
        with pytest.raises(DomainError):
            approx(series_eval(geometric_series(), const(Dyadic(3, -2))), 10, cfg)

    def test_negative_argument(self, cfg):
        """1/(1 - x) at x = -1/2 is 2/3"""
        a = approx(series_eval(geometric_series(), const(-HALF)), 60, cfg)
        assert abs(Fraction(a, 2 ** 60) - Fraction(2, 3)) <= Fraction(1, 2 ** 60)

    def test_polynomial(self, cfg):
        """1 + 2x + 3x**2 at x = 1/4"""
        sd = coefficient_series([1, 2, 3], 4, 2, HALF)
        a = approx(series_eval(sd, const(Dyadic(1, -2))), 40, cfg)
        assert abs(Fraction(a, 2 ** 40) - Fraction(27, 16)) <= Fraction(1, 2 ** 40)

    def test_series_add(self, cfg):
        """Doubling the geometric series gives 4 at 1/2"""
        sd = series_add(geometric_series(), geometric_series())
        assert sd.bound_A == Dyadic(2)
        a = approx(series_eval(sd, const(HALF)), 50, cfg)
        assert abs(Fraction(a, 2 ** 50) - 4) <= Fraction(1, 2 ** 50)

    def test_series_mul(self, cfg):
        """The square of 1/(1-x) at 1/4 is 16/9, on half the radius"""
        sd = series_mul(geometric_series(), geometric_series())
        assert sd.radius == Dyadic(1, -2)
        a = approx(series_eval(sd, const(Dyadic(1, -2))), 30, cfg)
        assert abs(Fraction(a, 2 ** 30) - Fraction(16, 9)) <= Fraction(1, 2 ** 30)


class TestLimit:
    """Tests for limits with a convergence rate"""

    def test_limit_of_dyadic_sequence(self, cfg):
        """lim 1 - 2**-j = 1 with rate(p) = p"""
        s = RealSeq(lambda j: const(ONE - Dyadic(1, -j)))
        a = approx(limit(s, lambda p: p), 80, cfg)
        assert abs(Fraction(a, 2 ** 80) - 1) <= Fraction(1, 2 ** 80)

    def test_limit_of_partial_sums(self, cfg):
        """Partial sums of 1/i! converge to e with rate p + 2"""
        def partial(j):
            total = const(0)
            factorial = 1
            for i in range(j + 1):
                if i:
                    factorial *= i
                total = total + const_rational(1, factorial)
            return total

        a = approx(limit(RealSeq(partial), lambda p: p + 2), 40, cfg)
        assert abs(mpmath.mpf(a) / mpmath.mpf(2) ** 40 - mpmath.e) <= mpmath.mpf(2) ** -40


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
