"""
Real: the lazy exact real number

A Real is a node of an immutable expression DAG. Nothing is computed at
construction; the evaluator (services/evaluator.py) walks the DAG in ball
arithmetic and refines the working precision until the root ball is small
enough. Each node remembers the best enclosure seen so far.
"""
import threading
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from ..errors import DomainError, OracleViolation
from .ball import Ball
from .dyadic import Dyadic

_cache_lock = threading.Lock()


class NodeKind(str, Enum):
    """Operation stored in a Real node"""
    CONST = "const"
    CONST_RATIONAL = "const_rational"
    LEAF_ORACLE = "leaf_oracle"
    NEG = "neg"
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    RECIP = "recip"
    RECIP_ENRICHED = "recip_enriched"
    SQRT = "sqrt"
    EXP = "exp"
    HEXP = "hexp"
    SERIES_EVAL = "series_eval"
    LIMIT = "limit"


class LeafOracle:
    """
    User-supplied approximation callback n -> a_n

    The callback must satisfy |x - a_n 2**-n| <= 2**-n. Every answer is
    intersected with the previous ones; an empty intersection means the
    callback broke its contract.
    """

    def __init__(self, approximate: Callable[[int], int], name: str = "oracle"):
        self.approximate = approximate
        self.name = name
        self._lock = threading.Lock()
        self._lower: Optional[Dyadic] = None
        self._upper: Optional[Dyadic] = None

    def enclose(self, n: int) -> Ball:
        a = int(self.approximate(n))
        ball = Ball(Dyadic(a, -n), Dyadic(1, -n))
        lower, upper = ball.lower, ball.upper
        with self._lock:
            if self._lower is not None:
                if upper < self._lower or lower > self._upper:
                    raise OracleViolation(
                        f"{self.name} returned {a}*2^-{n}, disjoint from earlier enclosures"
                    )
                lower = max(lower, self._lower)
                upper = min(upper, self._upper)
            self._lower, self._upper = lower, upper
        return ball


Operand = Union["Real", int, Fraction, Dyadic]


class Real:
    """
    Exact real number as a lazy expression node

    Arithmetic operators build new nodes; ints, Fractions and Dyadics are
    accepted as operands. Division is multiplication by the adaptive
    reciprocal; use recip_enriched when a lower bound is known.
    """

    __slots__ = ("kind", "children", "payload", "enrich_bits", "_cache", "__weakref__")

    def __init__(self, kind: NodeKind, children: Tuple["Real", ...] = (), payload=None):
        self.kind = kind
        self.children = tuple(children)
        self.payload = payload
        bits = max((c.enrich_bits for c in self.children), default=0)
        if kind is NodeKind.RECIP_ENRICHED:
            bits = max(bits, payload)
        self.enrich_bits = bits
        self._cache: Optional[Ball] = None

    # ------------------------------------------------------------------
    # Cache
    # ------------------------------------------------------------------

    @property
    def cached(self) -> Optional[Ball]:
        return self._cache

    def offer(self, ball: Ball) -> Ball:
        """Keep ball if it is strictly tighter than the cached one; return the tighter"""
        with _cache_lock:
            best = self._cache
            if best is None or ball.radius < best.radius:
                self._cache = ball
                return ball
            return best

    # ------------------------------------------------------------------
    # Operators
    # ------------------------------------------------------------------

    def __neg__(self) -> "Real":
        return neg(self)

    def __add__(self, other: Operand) -> "Real":
        return add(self, coerce(other))

    def __radd__(self, other: Operand) -> "Real":
        return add(coerce(other), self)

    def __sub__(self, other: Operand) -> "Real":
        return sub(self, coerce(other))

    def __rsub__(self, other: Operand) -> "Real":
        return sub(coerce(other), self)

    def __mul__(self, other: Operand) -> "Real":
        return mul(self, coerce(other))

    def __rmul__(self, other: Operand) -> "Real":
        return mul(coerce(other), self)

    def __truediv__(self, other: Operand) -> "Real":
        return mul(self, recip(coerce(other)))

    def __rtruediv__(self, other: Operand) -> "Real":
        return mul(coerce(other), recip(self))

    def as_fraction(self) -> Optional[Fraction]:
        """Exact value of a constant node, None for anything else"""
        if self.kind is NodeKind.CONST:
            return self.payload.to_fraction()
        if self.kind is NodeKind.CONST_RATIONAL:
            return self.payload
        return None

    def __repr__(self) -> str:
        if self.kind in (NodeKind.CONST, NodeKind.CONST_RATIONAL):
            return f"Real({self.kind.value} {self.payload})"
        if self.kind is NodeKind.RECIP_ENRICHED:
            return f"Real(recip_enriched k={self.payload})"
        return f"Real({self.kind.value})"


# ----------------------------------------------------------------------
# Constructors
# ----------------------------------------------------------------------

def const(value: Union[Dyadic, int]) -> Real:
    return Real(NodeKind.CONST, payload=Dyadic.coerce(value))


def const_rational(numerator: int, denominator: int = 1) -> Real:
    """Exact rational constant; dyadic values become plain constants"""
    if denominator == 0:
        raise DomainError("rational constant with zero denominator")
    value = Fraction(numerator, denominator)
    den = value.denominator
    if not den & (den - 1):
        return Real(NodeKind.CONST, payload=Dyadic.from_fraction(value))
    return Real(NodeKind.CONST_RATIONAL, payload=value)


def coerce(value: Operand) -> Real:
    if isinstance(value, Real):
        return value
    if isinstance(value, (int, Dyadic)):
        return const(value)
    if isinstance(value, Fraction):
        return const_rational(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to Real")


def leaf_oracle(approximate: Callable[[int], int], name: str = "oracle") -> Real:
    return Real(NodeKind.LEAF_ORACLE, payload=LeafOracle(approximate, name))


def neg(x: Real) -> Real:
    return Real(NodeKind.NEG, (x,))


def add(x: Real, y: Real) -> Real:
    return Real(NodeKind.ADD, (x, y))


def sub(x: Real, y: Real) -> Real:
    return Real(NodeKind.SUB, (x, y))


def mul(x: Real, y: Real) -> Real:
    return Real(NodeKind.MUL, (x, y))


def recip(x: Real) -> Real:
    """Adaptive reciprocal; may exhaust precision when x is 0 or very close to it"""
    return Real(NodeKind.RECIP, (x,))


def recip_enriched(x: Real, k: int) -> Real:
    """
    Reciprocal under the promise x >= 2**-k

    The evaluator starts at a working precision of at least k + n + guard
    bits, so separation from zero succeeds on the first pass whenever the
    promise holds.
    """
    if k < 0:
        raise ValueError("enrichment exponent k must be non-negative")
    return Real(NodeKind.RECIP_ENRICHED, (x,), payload=int(k))


def sqrt(x: Real) -> Real:
    return Real(NodeKind.SQRT, (x,))


def exp(x: Real) -> Real:
    return Real(NodeKind.EXP, (x,))


def hexp(x: Real) -> Real:
    """hexp(x) = 1/ln(e/x) on [0, 1], continuous with hexp(0) = 0"""
    return Real(NodeKind.HEXP, (x,))
