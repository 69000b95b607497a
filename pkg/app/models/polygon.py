"""
Harder-Narasimhan polygon model
"""

from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict

Vertex = Tuple[int, int]


class HNPolygon(BaseModel):
    """Convex integer lattice polygon from (0, 0) to (r, d).

    Stored in canonical form: first vertex (0, 0), abscissae strictly
    increasing, segment slopes strictly decreasing. Construct through
    `polygon_from_vertices` or `polygon_from_filtration`, which enforce
    that form.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[Vertex, ...]

    @property
    def r(self) -> int:
        return self.vertices[-1][0]

    @property
    def d(self) -> int:
        return self.vertices[-1][1]

    @property
    def endpoint(self) -> Vertex:
        return self.vertices[-1]

    @property
    def widths(self) -> List[int]:
        return [b[0] - a[0] for a, b in zip(self.vertices, self.vertices[1:])]

    @property
    def slopes(self) -> List[Fraction]:
        return [
            Fraction(b[1] - a[1], b[0] - a[0])
            for a, b in zip(self.vertices, self.vertices[1:])
        ]

    @property
    def segment_count(self) -> int:
        return len(self.vertices) - 1

    def height_at(self, x) -> Fraction:
        """Piecewise-linear height over 0 <= x <= r"""
        x = Fraction(x)
        if x < 0 or x > self.r:
            raise ValueError(f"x={x} outside [0, {self.r}]")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x <= x1:
                return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
        return Fraction(self.d)

    def sort_key(self) -> Tuple[Vertex, ...]:
        return self.vertices

    def __str__(self) -> str:
        return "[" + ",".join(f"({x},{y})" for x, y in self.vertices) + "]"

    def __repr__(self) -> str:
        return f"<HNPolygon({self})>"
