"""
Verification report model
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from app.models.polygon import HNPolygon


class VerificationReport(BaseModel):
    """Outcome of one combinatorial theorem check.

    A passing report lists extremal polygons as witnesses; a failing one
    lists at least one counterexample.
    """

    claim: str
    parameters: Dict[str, int]
    passed: bool
    witnesses: List[HNPolygon] = Field(default_factory=list)
    stats: Dict[str, int] = Field(default_factory=dict)
    details: Optional[Dict[str, Any]] = None
    subreports: List["VerificationReport"] = Field(default_factory=list)

    @model_validator(mode="after")
    def failed_reports_need_witnesses(self) -> "VerificationReport":
        if not self.passed and not self.witnesses:
            raise ValueError("a failed report must carry at least one witness")
        return self
