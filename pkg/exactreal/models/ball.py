"""
Ball: a midpoint-radius enclosure of an exact real
"""
from dataclasses import dataclass

from .dyadic import Dyadic, ZERO

# Radii carry only a short mantissa; they are always rounded upward.
RADIUS_BITS = 30


@dataclass(frozen=True)
class Ball:
    """
    Closed ball [center - radius, center + radius]

    The represented exact value lies inside the ball; every operation that
    produces a Ball keeps that contract by rounding centers to the working
    precision and absorbing the rounding error into the radius.
    """
    center: Dyadic
    radius: Dyadic = ZERO

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("ball radius must be non-negative")

    @classmethod
    def exact(cls, value) -> "Ball":
        return cls(Dyadic.coerce(value), ZERO)

    @classmethod
    def from_bounds(cls, lower: Dyadic, upper: Dyadic) -> "Ball":
        """Smallest ball containing [lower, upper]; center and radius are exact"""
        if upper < lower:
            raise ValueError("empty interval")
        return cls((lower + upper).half(), (upper - lower).half())

    @property
    def lower(self) -> Dyadic:
        return self.center - self.radius

    @property
    def upper(self) -> Dyadic:
        return self.center + self.radius

    def abs_upper(self) -> Dyadic:
        return abs(self.center) + self.radius

    def abs_lower(self) -> Dyadic:
        """Lower bound on |x| (zero when the ball straddles 0)"""
        gap = abs(self.center) - self.radius
        return gap if gap > 0 else ZERO

    def contains(self, value) -> bool:
        value = Dyadic.coerce(value)
        return abs(value - self.center) <= self.radius

    def contains_zero(self) -> bool:
        return abs(self.center) <= self.radius

    def intersects(self, other: "Ball") -> bool:
        return abs(self.center - other.center) <= self.radius + other.radius

    def widen(self, extra: Dyadic) -> "Ball":
        return Ball(self.center, (self.radius + extra).round_ceiling(RADIUS_BITS))

    def __str__(self) -> str:
        return f"[{self.center} +/- {self.radius}]"
