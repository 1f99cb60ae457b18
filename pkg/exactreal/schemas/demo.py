"""
Pydantic schemas for the demo reports
"""
from typing import List

from pydantic import BaseModel, Field


class DemoLine(BaseModel):
    """One fixture of a demo: computed value against its closed form"""
    name: str
    value: str
    reference: str
    deviation: float = Field(..., ge=0, description="Distance from the closed form")
    bound: str = Field(..., description="Guaranteed error bound, e.g. 2^-10")
    ok: bool


class DemoReport(BaseModel):
    demo: str
    lines: List[DemoLine]

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)
