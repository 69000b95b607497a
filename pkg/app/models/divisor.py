"""
Symbolic divisor-class expressions on the target of a finite morphism
"""

from typing import Dict

from pydantic import BaseModel, ConfigDict, Field, field_validator


class FormalDivisorExpr(BaseModel):
    """det(f_* O_X)^power (x) O_Y(sum n_i f(P_i)).

    `pushed_points` is kept canonical: zero multiplicities dropped and keys
    sorted, so equality is structural.
    """

    model_config = ConfigDict(frozen=True)

    det_structure_power: int = Field(..., ge=0)
    pushed_points: Dict[str, int] = Field(default_factory=dict)

    @field_validator("pushed_points")
    @classmethod
    def canonicalize_points(cls, v: Dict[str, int]) -> Dict[str, int]:
        return {token: v[token] for token in sorted(v) if v[token] != 0}

    def degree(self, structure_degree: int) -> int:
        """Degree of the line bundle given deg det(f_* O_X)"""
        return self.det_structure_power * structure_degree + sum(self.pushed_points.values())

    def __str__(self) -> str:
        terms = [f"det(f_*O_X)^{self.det_structure_power}"]
        for token, multiplicity in self.pushed_points.items():
            terms.append(f"{multiplicity:+d}*{token}")
        return " ".join(terms)
