"""
Curve context: the discrete data of the ambient curve
"""

from pydantic import BaseModel, ConfigDict

from app.core.exceptions import GenusTooSmall


class CurveContext(BaseModel):
    """Characteristic p and genus g of a smooth projective curve.

    Build instances through `make_context`, which checks that p is prime
    and g is non-negative.
    """

    model_config = ConfigDict(frozen=True)

    p: int
    g: int

    @property
    def canonical_degree(self) -> int:
        """Degree of the canonical bundle, 2g - 2"""
        return 2 * self.g - 2

    def require_theorem_range(self) -> None:
        """Theorem checks only make sense for g >= 2"""
        if self.g < 2:
            raise GenusTooSmall(f"genus g={self.g} is below 2")

    def __repr__(self) -> str:
        return f"<CurveContext(p={self.p}, g={self.g})>"
