"""
Polygon construction, the dominance order and oper polygons
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from app.core.exceptions import (
    BadEndpoints,
    EndpointMismatch,
    GenusTooSmall,
    IndivisibleDegree,
    NegativeGenus,
    NotConvex,
    ShapeMismatch,
)
from app.models.curve import CurveContext
from app.models.invariants import BundleInvariants
from app.models.polygon import HNPolygon, Vertex
from app.services.arithmetic import canonical_filtration_profile


def _as_vertex(point: Sequence[int]) -> Vertex:
    if len(point) != 2:
        raise BadEndpoints(f"vertex {point!r} is not a pair")
    x, y = point
    if isinstance(x, bool) or isinstance(y, bool) or not isinstance(x, int) or not isinstance(y, int):
        raise BadEndpoints(f"vertex {point!r} does not have integer coordinates")
    return (x, y)


def _segment_slope(a: Vertex, b: Vertex) -> Fraction:
    return Fraction(b[1] - a[1], b[0] - a[0])


def polygon_from_vertices(points: Iterable[Sequence[int]]) -> HNPolygon:
    """Canonical polygon through the given lattice points.

    (0, 0) is prepended when the first point lies to its right. Collinear
    runs are merged; an increase in slope is rejected.
    """
    vertices = [_as_vertex(point) for point in points]
    if not vertices:
        raise BadEndpoints("no vertices given")

    if vertices[0] != (0, 0):
        if vertices[0][0] > 0:
            vertices.insert(0, (0, 0))
        else:
            raise BadEndpoints(f"polygon must start at (0,0), got {vertices[0]}")

    if len(vertices) < 2:
        raise BadEndpoints("polygon needs an endpoint with r >= 1")

    for a, b in zip(vertices, vertices[1:]):
        if b[0] <= a[0]:
            raise BadEndpoints(f"abscissae must strictly increase: {a} then {b}")

    slopes = [_segment_slope(a, b) for a, b in zip(vertices, vertices[1:])]
    for i in range(1, len(slopes)):
        if slopes[i] > slopes[i - 1]:
            raise NotConvex(
                f"slope rises from {slopes[i - 1]} to {slopes[i]} at {vertices[i]}"
            )

    # keep a vertex only where the slope actually drops
    canonical = [vertices[0]]
    for i in range(1, len(vertices) - 1):
        if slopes[i] != slopes[i - 1]:
            canonical.append(vertices[i])
    canonical.append(vertices[-1])

    return HNPolygon(vertices=tuple(canonical))


def polygon_from_filtration(subobjects: Sequence[BundleInvariants]) -> HNPolygon:
    """Polygon of a filtration listed smallest subobject first, ending at E.

    The gradeds must have strictly decreasing slopes, as for an HN
    filtration.
    """
    if not subobjects:
        raise BadEndpoints("filtration is empty")

    vertices: List[Vertex] = [(0, 0)]
    for sub in subobjects:
        if sub.rank <= vertices[-1][0]:
            raise BadEndpoints(
                f"ranks must strictly increase: {vertices[-1][0]} then {sub.rank}"
            )
        vertices.append((sub.rank, sub.degree))

    slopes = [_segment_slope(a, b) for a, b in zip(vertices, vertices[1:])]
    for i in range(1, len(slopes)):
        if slopes[i] >= slopes[i - 1]:
            raise NotConvex(
                f"graded slopes {slopes[i - 1]} then {slopes[i]} are not strictly decreasing"
            )

    return HNPolygon(vertices=tuple(vertices))


def straight_polygon(r: int, d: int) -> HNPolygon:
    """The chord from (0, 0) to (r, d): polygon of a semistable bundle"""
    if r < 1:
        raise BadEndpoints(f"rank r={r} must be at least 1")
    return HNPolygon(vertices=((0, 0), (r, d)))


def oper_polygon(r: int, d: int, g: int) -> HNPolygon:
    """Polygon with vertices (i, i d/r + i (r - i)(g - 1)), 0 <= i <= r"""
    if r < 1:
        raise BadEndpoints(f"rank r={r} must be at least 1")
    if g < 0:
        raise NegativeGenus(f"genus g={g} is negative")
    if d % r != 0:
        raise IndivisibleDegree(f"r={r} does not divide d={d}")
    mu = d // r
    return polygon_from_vertices((i, i * mu + i * (r - i) * (g - 1)) for i in range(r + 1))


def dominates(P: HNPolygon, Q: HNPolygon) -> bool:
    """True iff P lies on or above Q over [0, r].

    Both are piecewise linear, so comparing heights at the union of their
    vertex abscissae is enough.
    """
    if P.endpoint != Q.endpoint:
        raise EndpointMismatch(f"endpoints differ: {P.endpoint} vs {Q.endpoint}")
    abscissae = sorted({x for x, _ in P.vertices} | {x for x, _ in Q.vertices})
    return all(P.height_at(x) >= Q.height_at(x) for x in abscissae)


def mu_extremes(P: HNPolygon) -> Tuple[Fraction, Fraction]:
    """(mu_max, mu_min): slopes of the first and last segments"""
    slopes = P.slopes
    return slopes[0], slopes[-1]


def slope_gap(P: HNPolygon) -> Fraction:
    """mu_max - mu_min"""
    mu_max, mu_min = mu_extremes(P)
    return mu_max - mu_min


def is_oper_shape(P: HNPolygon, g: int) -> bool:
    """Unit-width segments whose slopes drop by exactly 2g - 2 each step"""
    if g < 2:
        raise GenusTooSmall(f"genus g={g} is below 2")
    if any(width != 1 for width in P.widths):
        return False
    slopes = P.slopes
    return all(a - b == 2 * g - 2 for a, b in zip(slopes, slopes[1:]))


def canonical_filtration_polygon(inv: BundleInvariants, ctx: CurveContext) -> HNPolygon:
    """HN polygon of F^* F_* (E) for semistable E when g >= 2.

    The canonical filtration is then the HN filtration, so the polygon
    runs through the cumulative sums of its gradeds.
    """
    ctx.require_theorem_range()
    cumulative: List[BundleInvariants] = []
    for graded in canonical_filtration_profile(inv, ctx):
        cumulative.append(graded if not cumulative else cumulative[-1] + graded)
    return polygon_from_filtration(cumulative)


def invariants_from_canonical_polygon(P: HNPolygon, ctx: CurveContext) -> BundleInvariants:
    """Read (r, d) of E back off the HN polygon of F^* F_* (E).

    The last graded is E itself, so distinct E give distinct polygons.
    """
    ctx.require_theorem_range()
    widths = P.widths
    if len(widths) != ctx.p:
        raise ShapeMismatch(f"expected {ctx.p} segments, found {len(widths)}")
    if len(set(widths)) != 1:
        raise ShapeMismatch(f"segments have unequal ranks {widths}")
    slopes = P.slopes
    if any(a - b != ctx.canonical_degree for a, b in zip(slopes, slopes[1:])):
        raise ShapeMismatch(f"slope drops differ from 2g-2={ctx.canonical_degree}")
    (x0, y0), (x1, y1) = P.vertices[-2], P.vertices[-1]
    return BundleInvariants(rank=x1 - x0, degree=y1 - y0)
