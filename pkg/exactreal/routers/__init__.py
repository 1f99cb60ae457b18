"""
API Routers
"""
from . import demo, evaluate, logistic

__all__ = ["demo", "evaluate", "logistic"]
