"""
Exhaustive enumeration of admissible polygons and their dominance poset
"""

import itertools
import logging
import math
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from app.core.config import settings
from app.core.exceptions import BadEndpoints, BudgetExceeded, EndpointMismatch
from app.models.curve import CurveContext
from app.models.polygon import HNPolygon, Vertex
from app.models.poset import AdmissibilityConstraints, StratumPoset
from app.services.polygon import dominates

logger = logging.getLogger(__name__)


class NodeBudget:
    """Shared count of lattice extensions tried, capped"""

    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, count: int = 1) -> None:
        with self._lock:
            self.used += count
            if self.used > self.cap:
                logger.warning("node cap %d exhausted", self.cap)
                raise BudgetExceeded(f"search exceeded the node cap of {self.cap}")


def admissible_constraints(r: int, d: int, ctx: CurveContext) -> AdmissibilityConstraints:
    """Gap cap 2g - 2 and the slope window it forces.

    With at most r segments and every drop at most 2g - 2, the steepest
    and shallowest slopes differ by at most (r - 1)(2g - 2). The mean
    slope d/r lies between them, so every slope is within that distance
    of d/r.
    """
    gap = Fraction(ctx.canonical_degree)
    spread = (r - 1) * gap
    mean = Fraction(d, r)
    return AdmissibilityConstraints(
        max_gap=gap,
        slope_window=(mean - spread, mean + spread),
        max_vertices=r + 1,
    )


class PolygonEnumerator:
    """Depth-first search over integer lattice vertices.

    Each step adds a vertex whose segment slope is strictly below the
    previous one, within the window and the gap cap. A branch is cut as
    soon as (r, d) can no longer be reached: the remaining chord slope
    must stay under the current slope, inside the window, and within
    (remaining width) x max_gap of it.
    """

    def __init__(self, node_cap: Optional[int] = None, workers: Optional[int] = None):
        self.node_cap = node_cap if node_cap is not None else settings.NODE_CAP
        self.workers = workers if workers is not None else settings.ENUMERATION_WORKERS
        self.nodes_visited = 0

    def enumerate(self, r: int, d: int, c: AdmissibilityConstraints) -> List[HNPolygon]:
        if r < 1:
            raise BadEndpoints(f"rank r={r} must be at least 1")
        if not c.admits_mean(r, d):
            logger.debug("mean slope %s/%s lies outside the window; nothing to enumerate", d, r)
            return []

        budget = NodeBudget(self.node_cap)
        first_steps = list(self._steps(r, d, c, [(0, 0)], None, budget))

        if self.workers > 1 and len(first_steps) > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                chunks = list(pool.map(lambda step: self._subtree(r, d, c, step, budget), first_steps))
        else:
            chunks = [self._subtree(r, d, c, step, budget) for step in first_steps]

        self.nodes_visited = budget.used
        results = sorted(
            (HNPolygon(vertices=tuple(path)) for chunk in chunks for path in chunk),
            key=HNPolygon.sort_key,
        )
        logger.debug(
            "enumerated %d polygons to (%d,%d) visiting %d nodes", len(results), r, d, budget.used
        )
        return results

    def _subtree(self, r, d, c, step, budget) -> List[List[Vertex]]:
        vertex, step_slope = step
        path = [(0, 0), vertex]
        found: List[List[Vertex]] = []
        self._extend(r, d, c, path, step_slope, budget, found)
        return found

    def _extend(self, r, d, c, path, prev_slope, budget, found) -> None:
        if path[-1] == (r, d):
            found.append(list(path))
            return
        for vertex, step_slope in self._steps(r, d, c, path, prev_slope, budget):
            path.append(vertex)
            self._extend(r, d, c, path, step_slope, budget, found)
            path.pop()

    def _steps(self, r, d, c, path, prev_slope, budget):
        """Admissible next vertices from the end of `path`"""
        lower, upper = c.slope_window
        if prev_slope is not None:
            lower = max(lower, prev_slope - c.max_gap)
            upper = min(upper, prev_slope)
        if lower > upper:
            return
        if c.max_vertices is not None and len(path) >= c.max_vertices:
            return
        room_for_more = c.max_vertices is None or len(path) + 1 < c.max_vertices

        x, y = path[-1]
        for x_next in range(x + 1, r + 1):
            dx = x_next - x
            if x_next == r:
                candidates = [d]
            elif not room_for_more:
                continue
            else:
                candidates = range(math.ceil(y + lower * dx), math.floor(y + upper * dx) + 1)
            budget.spend(len(candidates))

            for y_next in candidates:
                s = Fraction(y_next - y, dx)
                if s < lower or s > upper:
                    continue
                if prev_slope is not None and s >= prev_slope:
                    continue
                if x_next < r and not self._can_finish(r, d, c, x_next, y_next, s):
                    continue
                yield (x_next, y_next), s

    @staticmethod
    def _can_finish(r, d, c, x, y, s) -> bool:
        remaining = r - x
        chord = Fraction(d - y, remaining)
        lower, _ = c.slope_window
        return lower <= chord < s and chord >= s - remaining * c.max_gap


def _strictly_admissible(vertices: Sequence[Vertex], c: AdmissibilityConstraints) -> bool:
    lower, upper = c.slope_window
    slopes = [Fraction(b[1] - a[1], b[0] - a[0]) for a, b in zip(vertices, vertices[1:])]
    if any(s < lower or s > upper for s in slopes):
        return False
    for a, b in zip(slopes, slopes[1:]):
        if b >= a or a - b > c.max_gap:
            return False
    return c.max_vertices is None or len(vertices) <= c.max_vertices


def enumerate_polygons_bruteforce(
    r: int, d: int, c: AdmissibilityConstraints, node_cap: Optional[int] = None
) -> List[HNPolygon]:
    """Generate-and-filter oracle, independent of the depth-first search.

    Tries every set of interior abscissae with every height in a bounding
    box and keeps the strictly convex candidates meeting the constraints.
    """
    if r < 1:
        raise BadEndpoints(f"rank r={r} must be at least 1")
    if not c.admits_mean(r, d):
        return []

    lower, upper = c.slope_window
    # a path from (0,0) to (r,d) with slopes in [lower, upper] stays in this box
    y_min = math.ceil(max(min(0, lower * r), min(d, d - upper * r)))
    y_max = math.floor(min(max(0, upper * r), max(d, d - lower * r)))
    heights = range(y_min, y_max + 1)

    budget = NodeBudget(node_cap if node_cap is not None else settings.NODE_CAP)
    results: List[HNPolygon] = []
    for size in range(0, r):
        for xs in itertools.combinations(range(1, r), size):
            for ys in itertools.product(heights, repeat=size):
                budget.spend()
                vertices = [(0, 0), *zip(xs, ys), (r, d)]
                if _strictly_admissible(vertices, c):
                    results.append(HNPolygon(vertices=tuple(vertices)))

    return sorted(results, key=HNPolygon.sort_key)


def enumerate_polygons(
    r: int,
    d: int,
    c: AdmissibilityConstraints,
    node_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[HNPolygon]:
    """All canonical lattice polygons to (r, d) meeting `c`, in lexicographic vertex order"""
    return PolygonEnumerator(node_cap=node_cap, workers=workers).enumerate(r, d, c)


def admissible_polygons(
    r: int,
    d: int,
    ctx: CurveContext,
    node_cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[HNPolygon]:
    """Polygons that can be HN polygons of semistable local systems.

    Successive graded slopes of such a system drop by at most 2g - 2.
    """
    ctx.require_theorem_range()
    return enumerate_polygons(r, d, admissible_constraints(r, d, ctx), node_cap, workers)


def build_poset(ps: Sequence[HNPolygon]) -> StratumPoset:
    """Dominance order on `ps` and its Hasse diagram"""
    elements = sorted(set(ps), key=HNPolygon.sort_key)
    if elements:
        endpoint = elements[0].endpoint
        for polygon in elements[1:]:
            if polygon.endpoint != endpoint:
                raise EndpointMismatch(f"endpoints differ: {endpoint} vs {polygon.endpoint}")

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(elements)))
    for i, j in itertools.permutations(range(len(elements)), 2):
        if dominates(elements[i], elements[j]):
            graph.add_edge(i, j)

    hasse = nx.transitive_reduction(graph)
    covers: List[Tuple[int, int]] = sorted(hasse.edges())
    return StratumPoset(elements=elements, covers=covers)
