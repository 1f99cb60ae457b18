"""
Function oracles and analytic functions
"""
import threading
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from ..errors import DomainError
from .dyadic import Dyadic, ONE
from .sequence import RealSeq, SeriesData

# Dyadic upper bound on Euler's number (87/32 = 2.71875)
E_UPPER = Dyadic(87, -5)


class Modulus:
    """Modulus of continuity made non-decreasing by a running max"""

    def __init__(self, mu: Callable[[int], int]):
        self._mu = mu
        self._values: List[int] = []
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("modulus is defined on natural numbers")
        with self._lock:
            while len(self._values) <= n:
                k = len(self._values)
                value = int(self._mu(k))
                if self._values:
                    value = max(value, self._values[-1])
                self._values.append(value)
            return self._values[n]


class FunctionOracle:
    """
    Real function on a closed dyadic interval [lower, upper]

    evaluate(t, n) returns a dyadic within 2**-n of f(t); the modulus
    promises |s - t| <= 2**-modulus(n)  =>  |f(s) - f(t)| <= 2**-n.
    """

    def __init__(
        self,
        evaluate: Callable[[Dyadic, int], Dyadic],
        modulus: Callable[[int], int],
        domain: Tuple[Dyadic, Dyadic] = (Dyadic(0), ONE),
        name: str = "f",
    ):
        lower, upper = (Dyadic.coerce(d) for d in domain)
        if upper < lower:
            raise ValueError("empty domain")
        self._evaluate = evaluate
        self.modulus = modulus if isinstance(modulus, Modulus) else Modulus(modulus)
        self.lower = lower
        self.upper = upper
        self.name = name

    def check_domain(self, t: Dyadic) -> Dyadic:
        t = Dyadic.coerce(t)
        if t < self.lower or t > self.upper:
            raise DomainError(f"{t} is outside the domain [{self.lower}, {self.upper}] of {self.name}")
        return t

    def __call__(self, t: Dyadic, n: int) -> Dyadic:
        return Dyadic.coerce(self._evaluate(self.check_domain(t), n))

    def __repr__(self) -> str:
        return f"FunctionOracle({self.name} on [{self.lower}, {self.upper}])"


class BivariateOracle:
    """
    Right-hand side f(t, y) on [0, 1] x [-1, 1] with values in [-1, 1]

    modulus_t is None for autonomous right-hand sides; the dependence on y
    is controlled by the Lipschitz constant of the problem.
    """

    def __init__(
        self,
        evaluate: Callable[[Dyadic, Dyadic, int], Dyadic],
        modulus_t: Optional[Callable[[int], int]] = None,
        name: str = "f",
    ):
        self._evaluate = evaluate
        self.modulus_t = Modulus(modulus_t) if modulus_t is not None else None
        self.name = name

    def __call__(self, t: Dyadic, y: Dyadic, n: int) -> Dyadic:
        return Dyadic.coerce(self._evaluate(t, y, n))


@dataclass(frozen=True)
class AnalyticFn:
    """
    Analytic function given by its Taylor coefficients at center

    The derivative bound |f^(j)| <= B l**j j**j gives |c_j| <= B (e l)**j, so
    on the certified radius r <= 1/(2 e l) the terms decay like B 2**-j.
    """
    coeffs: RealSeq
    center: Dyadic
    B: int
    ell: int

    def __post_init__(self):
        object.__setattr__(self, "center", Dyadic.coerce(self.center))
        if self.B < 1 or self.ell < 1:
            raise ValueError("analytic bounds need B >= 1 and ell >= 1")

    @property
    def radius(self) -> Dyadic:
        """1/(2 e ell) rounded down to a dyadic"""
        return Dyadic.div_floor(ONE, E_UPPER * (2 * self.ell), 16)

    @property
    def series(self) -> SeriesData:
        return SeriesData(self.coeffs, Dyadic(self.B), Dyadic(2), self.radius)

    @property
    def lipschitz(self) -> int:
        """Bound 2B/r on |f'| over the certified interval, rounded up"""
        return Dyadic.div_ceiling(Dyadic(2 * self.B), self.radius, 32).scaled_ceiling(0)

    def interval(self) -> Tuple[Dyadic, Dyadic]:
        r = self.radius
        return self.center - r, self.center + r
