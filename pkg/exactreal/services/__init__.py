"""
Operations on exact reals
"""
from .bench import BenchmarkService
from .evaluator import EvalConfig, approx, soft_compare, to_decimal
from .expression import ExpressionService
from .logistic import LogisticMapService

__all__ = [
    "BenchmarkService",
    "EvalConfig",
    "approx",
    "soft_compare",
    "to_decimal",
    "ExpressionService",
    "LogisticMapService",
]
