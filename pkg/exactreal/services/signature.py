"""
Registry of operations with a discrete enrichment input and discrete output

An operation registered here takes (k, real arguments, n) and returns
(l, real results) where l is its own discrete output. Each registration
declares a polynomial bound on l so that audit() can check it.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import AuditFailure
from ..models.dyadic import Dyadic, HALF
from ..models.real import Real, const, recip_enriched
from ..models.sequence import RealSeq, SeriesData
from .evaluator import approx
from .series import series_eval

logger = logging.getLogger(__name__)

Runner = Callable[[int, Sequence[Real], int], Tuple[int, List[Real]]]


@dataclass(frozen=True)
class PolynomialBound:
    """coefficient * (n + k + 1)**degree"""
    coefficient: int
    degree: int

    def __call__(self, n: int, k: int) -> int:
        return self.coefficient * (n + k + 1) ** self.degree


@dataclass
class Signature:
    name: str
    bound: PolynomialBound
    run: Runner
    sample: Callable[[int], List[Real]]
    description: str = ""


@dataclass(frozen=True)
class AuditRecord:
    name: str
    k: int
    n: int
    ell: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.ell <= self.bound


_registry: Dict[str, Signature] = {}


def register(signature: Signature) -> Signature:
    if signature.name in _registry:
        raise ValueError(f"signature {signature.name} already registered")
    _registry[signature.name] = signature
    return signature


def registered() -> List[str]:
    return sorted(_registry)


def get_signature(name: str) -> Signature:
    try:
        return _registry[name]
    except KeyError:
        raise KeyError(f"no signature registered as {name}") from None


def fully_polytime_signature(name: str, k: int, xs: Sequence[Real], n: int = 0) -> Tuple[int, List[Real]]:
    """Call a registered operation: (k, x) -> (l, y)"""
    return get_signature(name).run(k, xs, n)


def audit(names: Optional[Iterable[str]] = None, ks: Iterable[int] = range(1, 17), n: int = 16) -> List[AuditRecord]:
    """
    Run registered operations on their sample inputs and compare l with the bound

    Every result is also approximated at precision n, so a registration
    whose output cannot be evaluated fails here too.

    Raises:
        AuditFailure: some l exceeded its declared bound
    """
    records = []
    for name in (names or registered()):
        signature = get_signature(name)
        for k in ks:
            ell, ys = signature.run(k, signature.sample(k), n)
            for y in ys:
                approx(y, n)
            record = AuditRecord(name, k, n, ell, signature.bound(n, k))
            records.append(record)
            if not record.ok:
                logger.warning(f"{name} at k={k}: l={ell} exceeds bound {record.bound}")
                raise AuditFailure(f"{name} reported l={ell} above its bound {record.bound} at k={k}")
    return records


# ----------------------------------------------------------------------
# Built-in registrations
# ----------------------------------------------------------------------

def _run_recip_enriched(k: int, xs: Sequence[Real], n: int) -> Tuple[int, List[Real]]:
    return 0, [recip_enriched(xs[0], k)]


def scaled_geometric(k: int) -> SeriesData:
    """c_j = 2**k on [-1/2, 1/2]: A = 2**k, q = 2"""
    scale = Dyadic(1, k)
    return SeriesData(RealSeq(lambda j: const(scale), name=f"2^{k} geometric"), scale, Dyadic(2), HALF)


def _run_series_eval(k: int, xs: Sequence[Real], n: int) -> Tuple[int, List[Real]]:
    sd = scaled_geometric(k)
    return sd.truncation_degree(n), [series_eval(sd, xs[0])]


register(Signature(
    name="recip_enriched",
    bound=PolynomialBound(0, 0),
    run=_run_recip_enriched,
    sample=lambda k: [const(Dyadic(1, -k))],
    description="1/x under x >= 2^-k; no discrete output",
))

register(Signature(
    name="series_eval",
    bound=PolynomialBound(2, 1),
    run=_run_series_eval,
    sample=lambda k: [const(HALF)],
    description="power series with A = 2^k; l is the truncation degree",
))
