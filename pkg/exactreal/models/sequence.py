"""
Real sequences and power-series tail data
"""
import threading
from dataclasses import dataclass
from typing import Callable, Dict, Union

from .dyadic import Dyadic
from .real import Real


class RealSeq:
    """
    Sequence j -> x_j of Reals

    The callback runs at most once per index; later lookups return the same
    node so its cached enclosures are shared.
    """

    def __init__(self, term: Callable[[int], Real], name: str = "seq"):
        self._term = term
        self.name = name
        self._memo: Dict[int, Real] = {}
        self._lock = threading.Lock()

    def __getitem__(self, j: int) -> Real:
        if j < 0:
            raise IndexError("sequence index must be non-negative")
        with self._lock:
            node = self._memo.get(j)
        if node is not None:
            return node
        node = self._term(j)
        with self._lock:
            return self._memo.setdefault(j, node)

    def __repr__(self) -> str:
        return f"RealSeq({self.name})"


Number = Union[Dyadic, int]


@dataclass(frozen=True)
class SeriesData:
    """
    Coefficients c_j with the tail promise |c_j| r**j <= A q**-j

    A > 0 bounds the coefficient size, q > 1 the geometric decay, and r > 0
    is the radius on which evaluation is certified. The promise cannot be
    checked; it is what makes the truncation error computable.
    """
    coeffs: RealSeq
    bound_A: Dyadic
    bound_q: Dyadic
    radius: Dyadic

    def __post_init__(self):
        for name in ("bound_A", "bound_q", "radius"):
            object.__setattr__(self, name, Dyadic.coerce(getattr(self, name)))
        if self.bound_A <= 0:
            raise ValueError("bound_A must be positive")
        if self.bound_q <= 1:
            raise ValueError("bound_q must exceed 1")
        if self.radius <= 0:
            raise ValueError("evaluation radius must be positive")

    def truncation_degree(self, p: int) -> int:
        """Smallest N whose tail bound A q**-(N+1) / (1 - 1/q) is at most 2**-(p+1)"""
        need = self.bound_A.shift(p + 1)
        have = self.bound_q - 1
        degree = 0
        while have < need:
            have = have * self.bound_q
            degree += 1
        return degree


@dataclass(frozen=True)
class LimitData:
    """Sequence with a convergence rate: |x_rate(p) - x| <= 2**-p"""
    seq: RealSeq
    rate: Callable[[int], int]
