"""
Benchmark Service

Measures the bit cost of the operations as a function of the output
precision n (and a parameter k), one BenchRecord per (op, n). Inputs are
deterministic per op:

    add, mul   two random n-bit dyadics in [0, 1), seeded by n
    exp        exp(2^k) (k defaults to 0)
    hexp       hexp of a leaf oracle for 2^(-2^j), j = k or ceil(log2 n)
    series     series with c_j = 2^k on [-1/2, 1/2], evaluated at 1/2
    analytic   exp as an analytic function (B = l = 1) at 2^-(k+3), k defaults to 0
    max        MAX of t(1 - t) on [0, 1]
    integrate  integral of t(1 - t) over [0, 1]
    ode        y' = (1 - y)/2 at t = 1
"""
import csv
import logging
import math
import random
import statistics
import time
from typing import Callable, Dict, Iterable, List, Optional, TextIO, Tuple

from ..errors import ExactRealError, ParseError
from ..models.dyadic import Dyadic, HALF, ONE
from ..models.oracle import AnalyticFn
from ..models.real import const, const_rational, exp, hexp, leaf_oracle
from ..models.sequence import RealSeq
from ..schemas.bench import BenchRecord, CSV_FIELDS
from .analytic import analytic_real
from .calculus import integrate, max_param, oracle_from_rational
from .evaluator import EvalConfig, approx_with_stats
from .ode import plan_steps, relaxation, solve_ivp_enclosure
from .series import series_eval
from .signature import scaled_geometric

logger = logging.getLogger(__name__)

BENCH_OPS = ("add", "mul", "exp", "hexp", "series", "analytic", "max", "integrate", "ode")

# Repeat fast calls until this much time has been spent
MIN_SAMPLE_NS = 2_000_000
DEFAULT_SEED = 20240601

# (work_prec, restarts)
Cost = Tuple[int, int]


def parse_range(text: str) -> List[int]:
    """
    "a:b:s" is a, a+s, ..., up to b; "a:b:xs" is a, a*s, a*s*s, ... up to b

    A single integer is a one-element range.
    """
    parts = text.strip().split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) != 3:
            raise ValueError
        a, b = int(parts[0]), int(parts[1])
        step = parts[2].strip()
        if step.startswith("x"):
            factor = int(step[1:])
            if factor < 2 or a < 1:
                raise ValueError
            values = []
            while a <= b:
                values.append(a)
                a *= factor
            return values
        s = int(step)
        if s < 1:
            raise ValueError
        return list(range(a, b + 1, s))
    except ValueError:
        raise ParseError(f"bad range {text!r}; expected a:b:s or a:b:xs", 0) from None


def _random_dyadic(rng: random.Random, n: int) -> Dyadic:
    return Dyadic(rng.getrandbits(n) | 1, -n)


def _hexp_oracle(j: int):
    """a_n = floor(2**(n - 2**j)), an approximation of 2**-(2**j)"""
    shift = 1 << j

    def approximate(n: int) -> int:
        return 1 << (n - shift) if n >= shift else 0

    return leaf_oracle(approximate, name=f"2^-2^{j}")


def _exp_analytic() -> AnalyticFn:
    return AnalyticFn(RealSeq(lambda j: const_rational(1, math.factorial(j)), name="exp"), Dyadic(0), 1, 1)


def _parabola():
    return oracle_from_rational(lambda t: t * (1 - t), 1, name="t(1-t)")


class BenchmarkService:
    """
    Sweeps of single operations with the CSV schema of BenchRecord
    """

    @staticmethod
    def workload(op: str, n: int, k: Optional[int], cfg: EvalConfig, seed: int) -> Callable[[], Cost]:
        """Zero-argument callable performing one measured call of op"""
        if op in ("add", "mul"):
            rng = random.Random(seed + n)
            a, b = _random_dyadic(rng, n), _random_dyadic(rng, n)

            def run() -> Cost:
                x = const(a) + const(b) if op == "add" else const(a) * const(b)
                _, stats = approx_with_stats(x, n, cfg)
                return stats.work_prec, stats.restarts
            return run

        if op == "exp":
            arg = Dyadic(1, k or 0)

            def run() -> Cost:
                _, stats = approx_with_stats(exp(const(arg)), n, cfg)
                return stats.work_prec, stats.restarts
            return run

        if op == "hexp":
            j = k if k is not None else max(0, math.ceil(math.log2(max(n, 1))))

            def run() -> Cost:
                _, stats = approx_with_stats(hexp(_hexp_oracle(j)), n, cfg)
                return stats.work_prec, stats.restarts
            return run

        if op == "series":
            sd = scaled_geometric(k or 0)

            def run() -> Cost:
                _, stats = approx_with_stats(series_eval(sd, const(HALF)), n, cfg)
                return stats.work_prec, stats.restarts
            return run

        if op == "analytic":
            g = _exp_analytic()
            at = Dyadic(1, -(k or 0) - 3)

            def run() -> Cost:
                _, stats = approx_with_stats(analytic_real(g, const(at)), n, cfg)
                return stats.work_prec, stats.restarts
            return run

        if op == "max":
            F = _parabola()

            def run() -> Cost:
                max_param(F, ONE, n)
                return F.modulus(n + 2), 0
            return run

        if op == "integrate":
            F = _parabola()

            def run() -> Cost:
                integrate(F, ONE, n)
                return F.modulus(n + 3), 0
            return run

        if op == "ode":
            problem = relaxation()

            def run() -> Cost:
                solve_ivp_enclosure(problem, ONE, n)
                return plan_steps(problem, ONE, n)[1], 0
            return run

        raise ValueError(f"unknown benchmark op {op!r}; choose from {', '.join(BENCH_OPS)}")

    @staticmethod
    def measure(
        op: str,
        n: int,
        k: Optional[int] = None,
        cfg: Optional[EvalConfig] = None,
        seed: int = DEFAULT_SEED,
    ) -> BenchRecord:
        """Time one (op, n, k); failures become a row with the error kind as status"""
        cfg = cfg or EvalConfig.from_settings()
        run = BenchmarkService.workload(op, n, k, cfg, seed)
        calls = 0
        spent = 0
        cost: Cost = (0, 0)
        try:
            while spent < MIN_SAMPLE_NS:
                started = time.perf_counter_ns()
                cost = run()
                spent += time.perf_counter_ns() - started
                calls += 1
        except ExactRealError as exc:
            logger.warning(f"bench {op} n={n} k={k} failed: {exc}")
            return BenchRecord(op=op, n=n, k=k, time_ns=spent, status=exc.kind)
        return BenchRecord(
            op=op, n=n, k=k, time_ns=spent // calls,
            work_prec=cost[0], restarts=cost[1],
        )

    @staticmethod
    def sweep(
        op: str,
        ns: Iterable[int],
        k: Optional[int] = None,
        cfg: Optional[EvalConfig] = None,
        seed: int = DEFAULT_SEED,
    ) -> List[BenchRecord]:
        records = [BenchmarkService.measure(op, n, k, cfg, seed) for n in ns]
        return sorted(records, key=lambda r: (r.op, r.n, -1 if r.k is None else r.k))

    @staticmethod
    def write_csv(records: Iterable[BenchRecord], stream: TextIO) -> None:
        writer = csv.DictWriter(stream, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow(record.as_row())

    @staticmethod
    def read_csv(stream: TextIO) -> List[BenchRecord]:
        records = []
        for row in csv.DictReader(stream):
            row = dict(row)
            row["k"] = None if row["k"] == "" else int(row["k"])
            records.append(BenchRecord(**row))
        return records

    @staticmethod
    def loglog_slope(records: Iterable[BenchRecord]) -> float:
        """Least-squares slope of log(time) against log(n) over the successful rows"""
        points: Dict[int, int] = {r.n: r.time_ns for r in records if r.status == "ok" and r.time_ns > 0}
        if len(points) < 2:
            raise ValueError("need at least two successful rows with distinct n")
        xs = [math.log(n) for n in points]
        ys = [math.log(t) for t in points.values()]
        return statistics.linear_regression(xs, ys).slope
