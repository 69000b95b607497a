"""
Verification report schemas
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from app.models.report import VerificationReport
from app.schemas.polygon import PolygonPayload


class ReportPayload(BaseModel):
    """Stable-order JSON form of a verification report"""
    claim: str
    parameters: Dict[str, int]
    passed: bool
    witnesses: List[PolygonPayload]
    stats: Dict[str, int]
    details: Optional[Dict[str, Any]] = None
    subreports: Optional[List["ReportPayload"]] = None

    @classmethod
    def from_report(cls, report: VerificationReport, timing: bool = True) -> "ReportPayload":
        """Without timing, elapsed_ms is zeroed so output is reproducible"""
        return cls(
            claim=report.claim,
            parameters=report.parameters,
            passed=report.passed,
            witnesses=[PolygonPayload.from_polygon(w) for w in report.witnesses],
            stats={
                "enumerated": report.stats.get("enumerated", 0),
                "elapsed_ms": report.stats.get("elapsed_ms", 0) if timing else 0,
            },
            details=report.details,
            subreports=[cls.from_report(sub, timing) for sub in report.subreports] or None,
        )


class VerifyRequest(BaseModel):
    """Claim name and parameters"""
    claim: str
    p: int = Field(2, ge=2)
    g: int = Field(..., ge=0)
    r: int = Field(2, ge=1)
    d: int = 0
    node_cap: Optional[int] = Field(None, gt=0)
