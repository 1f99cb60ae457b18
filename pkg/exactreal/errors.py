"""
Error hierarchy for exactreal

Every error carries the exit code the command line maps it to:
2 = domain, 3 = precision/resource/promise failure, 4 = parse.
"""
from typing import Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_DOMAIN = 2
EXIT_PRECISION = 3
EXIT_PARSE = 4


class ExactRealError(Exception):
    """Base class for all library errors"""

    exit_code: int = EXIT_FAILURE
    kind: str = "error"


class DomainError(ExactRealError, ValueError):
    """Argument provably outside the domain of an operation"""

    exit_code = EXIT_DOMAIN
    kind = "domain"


class PrecisionExhausted(ExactRealError):
    """The restart loop would exceed the configured maximum precision"""

    exit_code = EXIT_PRECISION
    kind = "precision_exhausted"

    def __init__(self, message: str, precision: int = 0):
        super().__init__(message)
        self.precision = precision


class PassFailure(ExactRealError):
    """One evaluation pass could not produce a useful enclosure.

    Raised inside a pass; the restart loop catches it and raises the
    working precision.
    """

    exit_code = EXIT_PRECISION
    kind = "pass_failure"


class NotSeparated(PassFailure):
    """A ball contains zero where a reciprocal needs separation from it"""

    kind = "not_separated"


class WideEnclosure(PassFailure):
    """An intermediate ball is wider than 2**p and no longer bounds its sign"""

    kind = "wide_enclosure"


class PromiseViolation(ExactRealError):
    """An enrichment promise (lower bound, Lipschitz range, advice) was observed false"""

    exit_code = EXIT_PRECISION
    kind = "promise_violation"


class OracleViolation(ExactRealError):
    """A leaf oracle returned two disjoint enclosures"""

    exit_code = EXIT_PRECISION
    kind = "oracle_violation"


class GridExplosion(ExactRealError):
    """Sampling grid for MAX or integration exceeds the configured cap"""

    exit_code = EXIT_PRECISION
    kind = "grid_explosion"

    def __init__(self, message: str, points: int = 0):
        super().__init__(message)
        self.points = points


class StepExplosion(ExactRealError):
    """Euler step count exceeds the configured cap"""

    exit_code = EXIT_PRECISION
    kind = "step_explosion"

    def __init__(self, message: str, steps: int = 0):
        super().__init__(message)
        self.steps = steps


class AuditFailure(ExactRealError):
    """A registered signature reported a discrete output above its declared bound"""

    kind = "audit_failure"


class ParseError(ExactRealError):
    """Syntax error in an expression or numeric literal"""

    exit_code = EXIT_PARSE
    kind = "parse"

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class ExponentOverflow(ExactRealError, OverflowError):
    """Dyadic exponent left the machine-width range; fatal"""

    kind = "exponent_overflow"
