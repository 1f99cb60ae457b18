"""
Demo reports on the closed-form fixtures

Each demo runs one module on fixtures with known answers and reports the
computed value, the guaranteed bound and the deviation from the closed form.
"""
import logging
import random
from fractions import Fraction
from typing import List, Optional

from ..models.dyadic import Dyadic, ONE
from ..models.matrix import SymMat2
from ..schemas.demo import DemoLine, DemoReport
from .calculus import integrate, max_param, oracle_from_rational
from .enrich import eigenpair, residual
from .evaluator import EvalConfig, approx
from .ode import fixtures, solve_ivp

logger = logging.getLogger(__name__)

DEMO_NAMES = ("max", "integrate", "ode", "ev")
DEMO_BITS = 10
EV_BITS = 30


def _line(name: str, value: Dyadic, reference: Fraction, bits: int) -> DemoLine:
    deviation = abs(value.to_fraction() - reference)
    return DemoLine(
        name=name,
        value=str(float(value)),
        reference=str(float(reference)),
        deviation=float(deviation),
        bound=f"2^-{bits}",
        ok=deviation <= Fraction(1, 1 << bits),
    )


def parabola():
    return oracle_from_rational(lambda t: t * (1 - t), 1, name="t(1-t)")


def demo_max(n: int = DEMO_BITS) -> DemoReport:
    F = parabola()
    lines = [
        _line("max t(1-t) on [0, 1]", max_param(F, ONE, n), Fraction(1, 4), n),
        _line("max t(1-t) on [0, 1/4]", max_param(F, Dyadic(1, -2), n), Fraction(3, 16), n),
    ]
    return DemoReport(demo="max", lines=lines)


def demo_integrate(n: int = DEMO_BITS) -> DemoReport:
    F = parabola()
    identity = oracle_from_rational(lambda t: t, 1, name="t")
    lines = [
        _line("int_0^1 t(1-t) dt", integrate(F, ONE, n), Fraction(1, 6), n),
        _line("int_0^1 t dt", integrate(identity, ONE, n), Fraction(1, 2), n),
    ]
    return DemoReport(demo="integrate", lines=lines)


def demo_ode(n: int = DEMO_BITS, cfg: Optional[EvalConfig] = None) -> DemoReport:
    lines = []
    for problem in fixtures():
        value = solve_ivp(problem, ONE, n + 1)
        # closed form to n + 8 bits; its own error is far below the bound
        reference = Fraction(approx(problem.solution(ONE), n + 8, cfg), 1 << (n + 8))
        lines.append(_line(f"{problem.name} y(1)", value, reference, n))
    return DemoReport(demo="ode", lines=lines)


def random_symmetric(rng: random.Random, scale: int = 16) -> SymMat2:
    """Random rational symmetric matrix with discriminant at least 1"""
    while True:
        a11, a12, a22 = (Fraction(rng.randint(-scale * 4, scale * 4), scale) for _ in range(3))
        if (a11 - a22) ** 2 + 4 * a12 ** 2 >= 1:
            return SymMat2.from_rationals(a11, a12, a22)


def demo_ev(n: int = EV_BITS, count: int = 5, seed: int = 7, cfg: Optional[EvalConfig] = None) -> DemoReport:
    rng = random.Random(seed)
    lines: List[DemoLine] = []
    for i in range(count):
        M = random_symmetric(rng)
        lam, v = eigenpair(M, 2, cfg)
        r1, r2 = residual(M, lam, v)
        # bound on |r_i| from its approximation
        worst = max(abs(approx(r1, n + 2, cfg)), abs(approx(r2, n + 2, cfg))) + 1
        norm2 = Fraction(approx(v[0] * v[0] + v[1] * v[1], n + 2, cfg), 1 << (n + 2))
        norm_dev = abs(norm2 - 1) + Fraction(1, 1 << (n + 2))
        bound = Fraction(1, 1 << n)
        residual_bound = Fraction(worst, 1 << (n + 2))
        lines.append(DemoLine(
            name=f"M{i} = [[{M.a11.as_fraction()}, {M.a12.as_fraction()}], [., {M.a22.as_fraction()}]]",
            value=f"v = ({approx(v[0], n, cfg) / 2 ** n:.9f}, {approx(v[1], n, cfg) / 2 ** n:.9f})",
            reference=f"lambda = {approx(lam, n, cfg) / 2 ** n:.9f}",
            deviation=float(max(residual_bound, norm_dev)),
            bound=f"2^-{n}",
            ok=residual_bound <= bound and norm_dev <= bound,
        ))
    identity = SymMat2.from_rationals(1, 0, 1)
    lam, v = eigenpair(identity, 1, cfg)
    lines.append(DemoLine(
        name="I with advice 1",
        value=f"v = ({v[0].as_fraction()}, {v[1].as_fraction()})",
        reference="lambda = 1",
        deviation=0.0,
        bound="exact",
        ok=(v[0].as_fraction(), v[1].as_fraction()) == (1, 0),
    ))
    return DemoReport(demo="ev", lines=lines)


def run_demo(name: str, cfg: Optional[EvalConfig] = None) -> DemoReport:
    if name == "max":
        return demo_max()
    if name == "integrate":
        return demo_integrate()
    if name == "ode":
        return demo_ode(cfg=cfg)
    if name == "ev":
        return demo_ev(cfg=cfg)
    raise ValueError(f"unknown demo {name!r}; choose from {', '.join(DEMO_NAMES)}")


def format_report(report: DemoReport) -> str:
    rows = [f"demo {report.demo}"]
    for line in report.lines:
        status = "ok" if line.ok else "FAIL"
        rows.append(
            f"  {line.name}: {line.value}  reference {line.reference}  "
            f"deviation {line.deviation:.3e} <= {line.bound}  [{status}]"
        )
    return "\n".join(rows)
