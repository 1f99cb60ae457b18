"""
Rigorous explicit Euler for y' = f(t, y), y(0) = 0

Error recurrence for one step of size h from t_i:

    E_{i+1} = E_i (1 + h L) + h (w_t(h) + L h / 2 + 2**-q) + quantization

where w_t(h) bounds the change of f over a time step (from the time
modulus), L h / 2 accounts for the drift of y along the step (|y'| <= 1),
2**-q is the evaluation error of the right-hand side, and quantization
is the rounding of Y to a fixed grid. The ball (Y_i, E_i) encloses y(t_i).
"""
import logging
from typing import Iterator, List, Tuple, Union

from ..config import get_settings
from ..errors import DomainError, PromiseViolation, StepExplosion
from ..models.ball import Ball, RADIUS_BITS
from ..models.dyadic import Dyadic, HALF, ONE, ZERO
from ..models.ivp import Enclosure, IVProblem
from ..models.oracle import BivariateOracle
from ..models.real import const, exp, neg
from .ballarith import ball_exp

logger = logging.getLogger(__name__)

_TWO = Dyadic(2)


def _up(d: Dyadic) -> Dyadic:
    return d.round_ceiling(RADIUS_BITS)


def amplification_bound(lipschitz: int, t: Dyadic) -> Dyadic:
    """Upper bound G on (e**(L t) - 1) / L"""
    grow = ball_exp(Ball.exact(t * lipschitz), 40).upper
    return Dyadic.div_ceiling(grow - ONE, Dyadic(lipschitz), RADIUS_BITS)


def time_continuity(rhs: BivariateOracle, h: Dyadic, limit: int) -> Dyadic:
    """Bound on |f(s, y) - f(t, y)| for |s - t| <= h"""
    if rhs.modulus_t is None or not h:
        return ZERO
    # h <= 2**-H
    H = -h.ceil_log2()
    if rhs.modulus_t(0) > H:
        return _TWO
    k = 0
    while k < limit and rhs.modulus_t(k + 1) <= H:
        k += 1
    return Dyadic(1, -k)


def _clamp(y: Dyadic) -> Dyadic:
    if y > ONE:
        return ONE
    if y < -ONE:
        return -ONE
    return y


class _Plan:
    """Step count and precisions for one solve"""

    def __init__(self, problem: IVProblem, t: Dyadic, n: int):
        self.problem = problem
        self.t = t
        self.n = n
        G = amplification_bound(problem.lipschitz, t)
        self.q = n + 3 + max(0, G.ceil_log2())
        self.G = G
        self.steps = 1
        budget = Dyadic(1, -n - 2)
        while _up(self.defect_rate() * G) > budget:
            self.steps *= 2
            self._check_cap()

    def _check_cap(self) -> None:
        cap = get_settings().STEP_CAP
        if self.steps > cap:
            logger.warning(f"Euler step count {self.steps} exceeds the cap of {cap}")
            raise StepExplosion(f"solve needs more than {cap} Euler steps", steps=self.steps)

    @property
    def h(self) -> Dyadic:
        return self.t.shift(-(self.steps.bit_length() - 1))

    def defect_rate(self) -> Dyadic:
        h = self.h
        w_t = time_continuity(self.problem.rhs, h, self.q)
        return w_t + (h * self.problem.lipschitz).half()

    def double(self) -> None:
        self.steps *= 2
        self._check_cap()


def plan_steps(problem: IVProblem, t: Dyadic, n: int) -> Tuple[int, int]:
    """A priori (step count, right-hand side precision) for a solve at precision n"""
    plan = _Plan(problem, Dyadic.coerce(t), n)
    return plan.steps, plan.q


def _euler_nodes(problem: IVProblem, plan: _Plan) -> Iterator[Enclosure]:
    """Enclosures at t_0 = 0, ..., t_N = t for the planned step count"""
    rhs = problem.rhs
    L = problem.lipschitz
    h = plan.h
    q = plan.q
    # grid for Y: 2**-(Q+1) <= h 2**-(q+1)
    quantum = -(q - h.msb() + 1)
    rate = plan.defect_rate() + Dyadic(1, -q)
    source = _up(h * rate + Dyadic(1, quantum - 1))
    amplify = ONE + h * L

    y = ZERO
    err = ZERO
    t = ZERO
    yield Enclosure(t, Ball(y, err))
    for _ in range(plan.steps):
        if abs(y) - err > ONE:
            raise PromiseViolation(f"trajectory left [-1, 1] at t={t}")
        slope = rhs(t, _clamp(y), q)
        y = (y + h * slope).quantize(quantum)
        err = _up(err * amplify + source)
        t = t + h
        yield Enclosure(t, Ball(y, err))


def solve_ivp_enclosure(problem: IVProblem, t: Dyadic, n: int) -> Enclosure:
    """Enclosure of y(t) with radius at most 2**-n"""
    t = Dyadic.coerce(t)
    if t < 0 or t > ONE:
        raise DomainError(f"t={t} must lie in [0, 1]")
    if not t:
        return Enclosure(t, Ball(ZERO))
    plan = _Plan(problem, t, n)
    target = Dyadic(1, -n)
    while True:
        last = None
        for last in _euler_nodes(problem, plan):
            pass
        if last.value.radius <= target:
            logger.debug(f"{problem.name}: {plan.steps} steps at q={plan.q}")
            return last
        logger.debug(f"{problem.name}: radius {last.value.radius} above 2^-{n}, doubling steps")
        plan.double()


def solve_ivp(problem: IVProblem, t: Dyadic, n: int) -> Dyadic:
    """Dyadic within 2**-n of y(t)"""
    return solve_ivp_enclosure(problem, t, n).value.center


def solve_ivp_trace(
    problem: IVProblem, n: int, t: Dyadic = ONE, stream: bool = False
) -> Union[List[Enclosure], Iterator[Enclosure]]:
    """
    Enclosures at every Euler node on [0, t]

    With stream=True the nodes are generated one at a time with the planned
    step count, so memory stays constant; otherwise the step count is
    doubled until the final radius is at most 2**-n.
    """
    t = Dyadic.coerce(t)
    if t < 0 or t > ONE:
        raise DomainError(f"t={t} must lie in [0, 1]")
    if not t:
        return iter([Enclosure(t, Ball(ZERO))]) if stream else [Enclosure(t, Ball(ZERO))]
    plan = _Plan(problem, t, n)
    if stream:
        return _euler_nodes(problem, plan)
    target = Dyadic(1, -n)
    while True:
        nodes = list(_euler_nodes(problem, plan))
        if nodes[-1].value.radius <= target:
            return nodes
        plan.double()


def euler_fixed(problem: IVProblem, t: Dyadic, steps: int, q: int) -> Dyadic:
    """Plain Euler with a fixed step count and right-hand side precision q"""
    t = Dyadic.coerce(t)
    if steps < 1 or steps & (steps - 1):
        raise ValueError("steps must be a power of two")
    h = t.shift(-(steps.bit_length() - 1))
    y = ZERO
    s = ZERO
    for _ in range(steps):
        y = y + h * problem.rhs(s, _clamp(y), q)
        s = s + h
    return y


# ----------------------------------------------------------------------
# Closed-form problems
# ----------------------------------------------------------------------

def constant_slope() -> IVProblem:
    """y' = 1, y = t"""
    return IVProblem(
        BivariateOracle(lambda t, y, n: ONE, name="1"),
        lipschitz=1,
        name="constant_slope",
        solution=lambda t: const(t),
    )


def decay() -> IVProblem:
    """y' = -y, y = 0"""
    return IVProblem(
        BivariateOracle(lambda t, y, n: -y, name="-y"),
        lipschitz=1,
        name="decay",
        solution=lambda t: const(0),
    )


def relaxation() -> IVProblem:
    """y' = (1 - y)/2, y = 1 - e**(-t/2)"""
    return IVProblem(
        BivariateOracle(lambda t, y, n: (ONE - y) * HALF, name="(1-y)/2"),
        lipschitz=1,
        name="relaxation",
        solution=lambda t: const(1) - exp(neg(const(t * HALF))),
    )


def fixtures() -> Tuple[IVProblem, ...]:
    return constant_slope(), decay(), relaxation()
