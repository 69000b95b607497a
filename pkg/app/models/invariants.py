"""
Numerical class of a vector bundle
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field


class BundleInvariants(BaseModel):
    """Rank and degree of a bundle"""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(..., ge=1, description="Rank, at least 1")
    degree: int = Field(..., description="Degree")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def __add__(self, other: "BundleInvariants") -> "BundleInvariants":
        return BundleInvariants(rank=self.rank + other.rank, degree=self.degree + other.degree)

    def __repr__(self) -> str:
        return f"<BundleInvariants(rank={self.rank}, degree={self.degree})>"
