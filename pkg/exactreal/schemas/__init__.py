"""
Pydantic schemas for requests, responses and records
"""
from .bench import BenchRecord, CSV_FIELDS
from .demo import DemoLine, DemoReport
from .evaluate import ErrorResponse, EvalRequest, EvalResponse, OutputFormat
from .logistic import LogisticMode, LogisticRequest, LogisticResult

__all__ = [
    "BenchRecord",
    "CSV_FIELDS",
    "DemoLine",
    "DemoReport",
    "ErrorResponse",
    "EvalRequest",
    "EvalResponse",
    "OutputFormat",
    "LogisticMode",
    "LogisticRequest",
    "LogisticResult",
]
