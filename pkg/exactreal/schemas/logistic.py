"""
Pydantic schemas for the logistic map demonstration
"""
from enum import Enum

from pydantic import BaseModel, Field


class LogisticMode(str, Enum):
    """Arithmetic used to iterate x <- r x (1 - x)"""
    EXACT = "exact"
    RATIONAL = "rational"
    F64 = "f64"
    F32 = "f32"
    LONGDOUBLE = "longdouble"
    VPA = "vpa"


class LogisticRequest(BaseModel):
    """Request to iterate the logistic map"""
    steps: int = Field(..., ge=0, description="Number of iterations m")
    mode: LogisticMode = Field(default=LogisticMode.EXACT)
    r: str = Field(default="15/4", description="Parameter, as p/q, decimal or m*2^e")
    x0: str = Field(default="1/2", description="Start value in [0, 1]")
    digits: int = Field(default=10, ge=1, le=10000, description="Decimal digits printed")


class LogisticResult(BaseModel):
    """Iterate x_m in the requested arithmetic"""
    mode: LogisticMode
    steps: int
    r: str
    x0: str
    digits: int
    value: str = Field(..., description="x_m with `digits` decimals")
    elapsed_s: float = Field(..., ge=0)
    within_budget: bool = Field(..., description="Finished inside the configured time budget")
