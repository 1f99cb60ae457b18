"""
Initial value problems y' = f(t, y), y(0) = 0 on [0, 1]
"""
from dataclasses import dataclass
from typing import Callable, Optional

from .ball import Ball
from .dyadic import Dyadic
from .oracle import BivariateOracle
from .real import Real


@dataclass(frozen=True)
class IVProblem:
    """
    Right-hand side with the Lipschitz promise

    |f(t, y1) - f(t, y2)| <= lipschitz |y1 - y2| and f in [-1, 1] are promises
    of the caller. solution, when present, is the closed form used by demos
    and tests.
    """
    rhs: BivariateOracle
    lipschitz: int
    name: str = "ivp"
    solution: Optional[Callable[[Dyadic], Real]] = None

    def __post_init__(self):
        if self.lipschitz < 1:
            raise ValueError("Lipschitz constant must be at least 1")


@dataclass(frozen=True)
class Enclosure:
    """Ball containing y(t)"""
    t: Dyadic
    value: Ball

    def __str__(self) -> str:
        return f"y({self.t}) in {self.value}"
