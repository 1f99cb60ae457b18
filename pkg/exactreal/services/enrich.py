"""
Eigenvector of a symmetric 2x2 matrix with the distinct-eigenvalue advice

Without knowing whether the two eigenvalues coincide, no eigenvector can be
computed from approximations of the entries. With the advice it can: one
eigenvalue means M = lambda I, two means the discriminant is positive and
one of two candidate vectors is provably long enough to normalize.
"""
import logging
from typing import Optional, Tuple

from ..errors import PromiseViolation
from ..models.dyadic import Dyadic, HALF
from ..models.matrix import SymMat2
from ..models.real import Real, const, recip_enriched, sqrt
from .evaluator import EvalConfig, approx, soft_compare

logger = logging.getLogger(__name__)

Vector = Tuple[Real, Real]

# Precision schedule for the candidate selection
FIRST_BITS = 8
MAX_SELECTION_BITS = 2048


def larger_eigenvalue(M: SymMat2) -> Real:
    """(tr + sqrt(disc)) / 2"""
    return (M.trace() + sqrt(M.discriminant())) * const(HALF)


def _norm2(v: Vector) -> Real:
    return v[0] * v[0] + v[1] * v[1]


def _verified_lower_bound(norm2: Real, disc: Real, n: int, cfg: Optional[EvalConfig]) -> Optional[Dyadic]:
    """Dyadic lower bound on norm2 if it provably reaches disc/4 at precision n"""
    lower = Dyadic(approx(norm2, n, cfg) - 1, -n)
    disc_upper = Dyadic(approx(disc, n, cfg) + 1, -n - 2)
    if lower > 0 and lower >= disc_upper:
        return lower
    return None


def _witness_bits(lower: Dyadic) -> int:
    """k with sqrt(lower) >= 2**-k"""
    e = lower.msb() - 1
    return max(0, -(e // 2))


def eigenvector_2x2(
    M: SymMat2, distinct_count: int, cfg: Optional[EvalConfig] = None
) -> Vector:
    """
    Unit eigenvector for the larger eigenvalue

    Args:
        M: Symmetric matrix
        distinct_count: Number of distinct eigenvalues (1 or 2), a promise

    Returns:
        (v1, v2) with v1**2 + v2**2 = 1 and M v = lambda v. Which of the valid
        vectors comes back may depend on how the entries are approximated.

    Raises:
        PromiseViolation: distinct_count is 2 but no candidate could be
            separated from zero up to the selection cap
    """
    if distinct_count == 1:
        return const(1), const(0)
    if distinct_count != 2:
        raise ValueError("distinct_count must be 1 or 2")

    lam = larger_eigenvalue(M)
    disc = M.discriminant()
    u = (M.a12, lam - M.a11)
    w = (lam - M.a22, M.a12)
    nu, nw = _norm2(u), _norm2(w)

    n = FIRST_BITS
    while n <= MAX_SELECTION_BITS:
        if soft_compare(nu, nw, n, cfg):
            candidates = ((w, nw), (u, nu))
        else:
            candidates = ((u, nu), (w, nw))
        for v, norm2 in candidates:
            lower = _verified_lower_bound(norm2, disc, n, cfg)
            if lower is not None:
                k = _witness_bits(lower)
                logger.debug(f"eigenvector candidate verified at {n} bits, witness k={k}")
                inv = recip_enriched(sqrt(norm2), k)
                return v[0] * inv, v[1] * inv
        n *= 2
    logger.warning("no eigenvector candidate separated from zero")
    raise PromiseViolation("eigenvalues are not separated: discriminant indistinguishable from 0")


def eigenpair(M: SymMat2, distinct_count: int, cfg: Optional[EvalConfig] = None) -> Tuple[Real, Vector]:
    """(lambda, v) for the larger eigenvalue"""
    if distinct_count == 1:
        return M.a11, eigenvector_2x2(M, 1, cfg)
    return larger_eigenvalue(M), eigenvector_2x2(M, distinct_count, cfg)


def residual(M: SymMat2, lam: Real, v: Vector) -> Vector:
    """M v - lambda v"""
    m1, m2 = M.apply(v)
    return m1 - lam * v[0], m2 - lam * v[1]
