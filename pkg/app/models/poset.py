"""
Search constraints and stratum posets
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.models.polygon import HNPolygon


class AdmissibilityConstraints(BaseModel):
    """Bounds that make the lattice polygon search finite.

    max_gap caps the drop between successive segment slopes; every
    segment slope must lie in slope_window; max_vertices (counting the
    origin) is optional.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    max_gap: Fraction
    slope_window: Tuple[Fraction, Fraction]
    max_vertices: Optional[int] = None

    @field_validator("max_gap", mode="before")
    @classmethod
    def validate_max_gap(cls, v):
        v = Fraction(v)
        if v < 0:
            raise ValueError("max_gap must be non-negative")
        return v

    @field_validator("slope_window", mode="before")
    @classmethod
    def validate_window(cls, v):
        lower, upper = Fraction(v[0]), Fraction(v[1])
        if lower > upper:
            raise ValueError("slope window lower bound exceeds upper bound")
        return (lower, upper)

    @model_validator(mode="after")
    def validate_vertex_cap(self) -> "AdmissibilityConstraints":
        if self.max_vertices is not None and self.max_vertices < 2:
            raise ValueError("max_vertices must be at least 2")
        return self

    def admits_mean(self, r: int, d: int) -> bool:
        """The mean slope d/r must sit inside the window"""
        lower, upper = self.slope_window
        return lower <= Fraction(d, r) <= upper


class StratumPoset(BaseModel):
    """Polygons with a common endpoint under the dominance order.

    covers holds (i, j) whenever elements[i] covers elements[j].
    """

    model_config = ConfigDict(frozen=True)

    elements: List[HNPolygon]
    covers: List[Tuple[int, int]]

    def maximal_indices(self) -> List[int]:
        """Elements nothing covers"""
        covered = {j for _, j in self.covers}
        return [i for i in range(len(self.elements)) if i not in covered]

    def minimal_indices(self) -> List[int]:
        """Elements that cover nothing"""
        covering = {i for i, _ in self.covers}
        return [i for i in range(len(self.elements)) if i not in covering]

    def maximum(self) -> Optional[HNPolygon]:
        """Unique maximal element, if there is exactly one"""
        tops = self.maximal_indices()
        return self.elements[tops[0]] if len(tops) == 1 else None

    def minimum(self) -> Optional[HNPolygon]:
        """Unique minimal element, if there is exactly one"""
        bottoms = self.minimal_indices()
        return self.elements[bottoms[0]] if len(bottoms) == 1 else None
