"""
Pydantic schema for benchmark rows
"""
from typing import Optional

from pydantic import BaseModel, Field

CSV_FIELDS = ("op", "n", "k", "time_ns", "work_prec", "restarts", "status")


class BenchRecord(BaseModel):
    """One (op, n, k) measurement"""
    op: str
    n: int = Field(..., ge=0, description="Output precision in bits")
    k: Optional[int] = Field(default=None, description="Magnitude or enrichment parameter")
    time_ns: int = Field(..., ge=0, description="Wall time per call")
    work_prec: int = Field(default=0, ge=0, description="Working precision or grid bits reached")
    restarts: int = Field(default=0, ge=0)
    status: str = Field(default="ok", description="ok, or the error kind of a failed row")

    def as_row(self) -> dict:
        row = self.model_dump()
        row["k"] = "" if self.k is None else self.k
        return row
