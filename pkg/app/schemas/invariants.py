"""
Bundle invariant and divisor schemas
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from app.models.divisor import FormalDivisorExpr
from app.models.invariants import BundleInvariants
from app.models.rational import format_rational
from app.utils.validators import validate_point_token


class InvariantsPayload(BaseModel):
    """{"rank", "degree"} with an optional exact slope string"""
    rank: int
    degree: int
    slope: Optional[str] = None

    @classmethod
    def from_invariants(cls, inv: BundleInvariants, with_slope: bool = False) -> "InvariantsPayload":
        return cls(
            rank=inv.rank,
            degree=inv.degree,
            slope=format_rational(inv.slope) if with_slope else None,
        )


class InvariantsRequest(BaseModel):
    """Curve context plus a bundle's rank and degree"""
    p: int = Field(..., ge=2, description="Characteristic")
    g: int = Field(..., ge=0, description="Genus")
    r: int = Field(..., ge=1, description="Rank")
    d: int = Field(..., description="Degree")


class ProfileResponse(BaseModel):
    """Gradeds of the canonical filtration, steepest first"""
    gradeds: List[InvariantsPayload]
    total: InvariantsPayload


class DeterminantRequest(BaseModel):
    """Rank, det divisor and point map for the determinant of a pushforward"""
    rank: int = Field(..., ge=1)
    divisor: Dict[str, int] = Field(default_factory=dict)
    point_map: Dict[str, str] = Field(default_factory=dict)

    @field_validator("divisor", "point_map")
    @classmethod
    def validate_tokens(cls, v):
        for token in v:
            if not validate_point_token(token):
                raise ValueError(f"Invalid point token {token!r}")
        return v


class DeterminantResponse(BaseModel):
    """Symbolic determinant {"power", "points"}"""
    power: int
    points: Dict[str, int]
    expression: str

    @classmethod
    def from_expr(cls, expr: FormalDivisorExpr) -> "DeterminantResponse":
        return cls(
            power=expr.det_structure_power,
            points=dict(expr.pushed_points),
            expression=str(expr),
        )
