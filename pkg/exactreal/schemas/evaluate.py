"""
Pydantic schemas for expression evaluation
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class OutputFormat(str, Enum):
    DEC = "dec"
    DYADIC = "dyadic"


class EvalRequest(BaseModel):
    """Expression to evaluate, with either a bit precision or a digit count"""
    expr: str = Field(..., min_length=1, description="e.g. exp(sqrt(2)) or recip(x; 5)")
    prec: Optional[int] = Field(default=None, ge=0, description="Absolute error 2^-prec")
    digits: Optional[int] = Field(default=None, ge=1, le=100000, description="Decimal digits")
    format: OutputFormat = Field(default=OutputFormat.DEC)

    @model_validator(mode="after")
    def check_precision(self) -> "EvalRequest":
        if self.prec is not None and self.digits is not None:
            raise ValueError("give prec or digits, not both")
        return self


class EvalResponse(BaseModel):
    expr: str = Field(..., description="Expression as parsed, fully parenthesized")
    value: str
    prec: int = Field(..., description="Bits of absolute precision behind the value")
    work_prec: int = Field(..., description="Working precision reached")
    restarts: int


class ErrorResponse(BaseModel):
    error: str = Field(..., description="Error kind, e.g. domain or precision_exhausted")
    detail: str
