"""
Domain value types for exactreal
"""
from .ball import Ball
from .dyadic import Dyadic
from .ivp import Enclosure, IVProblem
from .matrix import SymMat2
from .oracle import AnalyticFn, BivariateOracle, FunctionOracle
from .real import NodeKind, Real
from .sequence import LimitData, RealSeq, SeriesData

__all__ = [
    "Ball",
    "Dyadic",
    "Enclosure",
    "IVProblem",
    "SymMat2",
    "AnalyticFn",
    "BivariateOracle",
    "FunctionOracle",
    "NodeKind",
    "Real",
    "LimitData",
    "RealSeq",
    "SeriesData",
]
