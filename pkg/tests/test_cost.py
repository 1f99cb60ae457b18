"""
Acceptance: Cost Behaviour
==========================
Working precision reached by hexp and exp, the time slope of addition, and
the growth of analytic evaluation cost. Only ratios and monotonicity are
asserted, never absolute times.
"""
import math

import pytest

from exactreal.models.dyadic import Dyadic
from exactreal.models.oracle import AnalyticFn
from exactreal.models.real import const, const_rational
from exactreal.models.sequence import RealSeq
from exactreal.services.analytic import analytic_real
from exactreal.services.bench import BenchmarkService, parse_range
from exactreal.services.evaluator import EvalConfig, approx_with_stats


def exp_fn() -> AnalyticFn:
    return AnalyticFn(RealSeq(lambda j: const_rational(1, math.factorial(j)), name="exp"), 0, 1, 1)


class TestHexpAgainstExp:
    """hexp needs precision exponential in j, exp only linear in n"""

    @pytest.mark.parametrize("j", range(3, 9))
    def test_hexp_precision(self, j):
        """At 2^(-2^j) the working precision reaches 2^j"""
        record = BenchmarkService.measure("hexp", 10, k=j, cfg=EvalConfig())
        assert record.status == "ok"
        assert record.work_prec >= 2 ** j

    def test_hexp_doubles(self):
        """Past the initial precision, each j doubles what hexp needs"""
        reached = [BenchmarkService.measure("hexp", 10, k=j, cfg=EvalConfig()).work_prec for j in (6, 7, 8)]
        assert reached == [128, 256, 512]

    def test_exp_linear(self):
        """exp(1) never needs more than 2n + 64 bits"""
        for n in parse_range("64:1024:x2"):
            record = BenchmarkService.measure("exp", n, k=0, cfg=EvalConfig())
            assert record.status == "ok"
            assert record.work_prec <= 2 * n + 64


@pytest.mark.bench
class TestAdditionSlope:
    """Addition time grows about linearly in n"""

    def test_loglog_slope(self):
        """Fitted slope over n = 2^10 .. 2^16 lies in [0.8, 1.6]"""
        records = BenchmarkService.sweep("add", parse_range("1024:65536:x2"), cfg=EvalConfig())
        assert all(r.status == "ok" for r in records)
        slope = BenchmarkService.loglog_slope(records)
        assert 0.8 <= slope <= 1.6


class TestAnalyticCost:
    """Doubling n costs a bounded factor for analytic evaluation"""

    @pytest.mark.parametrize("n", [50, 100, 200])
    def test_truncation_degree_ratio(self, n):
        """Series terms needed at 2n over those at n is at most 8"""
        series = exp_fn().series
        assert series.truncation_degree(2 * n) <= 8 * series.truncation_degree(n)

    @pytest.mark.parametrize("n", [50, 100])
    def test_working_precision_ratio(self, n):
        """Working precision at 2n over that at n is at most 8"""
        x = const(Dyadic(1, -3))
        _, at_n = approx_with_stats(analytic_real(exp_fn(), x), n, EvalConfig())
        _, at_2n = approx_with_stats(analytic_real(exp_fn(), x), 2 * n, EvalConfig())
        assert at_2n.work_prec <= 8 * at_n.work_prec

    @pytest.mark.bench
    @pytest.mark.parametrize("n", [64, 128, 256])
    def test_measured_time_ratio(self, n):
        """Measured evaluation time at 2n over that at n is at most 8"""
        at_n, at_2n = BenchmarkService.sweep("analytic", [n, 2 * n], cfg=EvalConfig())
        assert at_n.status == at_2n.status == "ok"
        assert at_2n.time_ns <= 8 * at_n.time_ns


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
