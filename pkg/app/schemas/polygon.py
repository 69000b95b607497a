"""
Polygon and poset schemas
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from app.core.exceptions import BadEndpoints
from app.models.polygon import HNPolygon
from app.models.poset import StratumPoset
from app.services.polygon import polygon_from_vertices


class PolygonPayload(BaseModel):
    """Interchange form of a polygon: {"r", "d", "vertices"}"""
    r: int
    d: int
    vertices: List[List[int]] = Field(..., description="Vertices in canonical form")

    @classmethod
    def from_polygon(cls, polygon: HNPolygon) -> "PolygonPayload":
        return cls(r=polygon.r, d=polygon.d, vertices=[list(v) for v in polygon.vertices])

    def to_polygon(self) -> HNPolygon:
        """Canonicalize and check that r, d match the last vertex"""
        polygon = polygon_from_vertices(self.vertices)
        if polygon.endpoint != (self.r, self.d):
            raise BadEndpoints(
                f"declared endpoint ({self.r},{self.d}) differs from last vertex {polygon.endpoint}"
            )
        return polygon


class PosetPayload(BaseModel):
    """Poset as {"elements": [...], "covers": [[i, j], ...]}"""
    elements: List[PolygonPayload]
    covers: List[List[int]]
    maximum: Optional[int] = None
    minimum: Optional[int] = None

    @classmethod
    def from_poset(cls, poset: StratumPoset) -> "PosetPayload":
        tops = poset.maximal_indices()
        bottoms = poset.minimal_indices()
        return cls(
            elements=[PolygonPayload.from_polygon(e) for e in poset.elements],
            covers=[[i, j] for i, j in poset.covers],
            maximum=tops[0] if len(tops) == 1 else None,
            minimum=bottoms[0] if len(bottoms) == 1 else None,
        )


class DominanceResponse(BaseModel):
    """Dominance check result"""
    dominates: bool
    p1: PolygonPayload
    p2: PolygonPayload


class SlopeStatsResponse(BaseModel):
    """Extreme slopes of a polygon"""
    mu_max: str
    mu_min: str
    gap: str
