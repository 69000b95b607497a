"""
Polygon endpoints
"""

from typing import List, Optional

from fastapi import APIRouter, HTTPException, status
from pydantic import BaseModel, Field

from app.core.exceptions import FrobstratError
from app.models.poset import AdmissibilityConstraints
from app.models.rational import parse_rational
from app.schemas.polygon import DominanceResponse, PolygonPayload
from app.services.arithmetic import make_context
from app.services.enumeration import (
    admissible_constraints,
    enumerate_polygons,
    enumerate_polygons_bruteforce,
)
from app.services.polygon import dominates, oper_polygon

router = APIRouter()


class OperRequest(BaseModel):
    r: int = Field(..., ge=1)
    d: int
    g: int = Field(..., ge=0)


class DominanceRequest(BaseModel):
    p1: PolygonPayload
    p2: PolygonPayload


class EnumerateRequest(BaseModel):
    """Either g (gap cap 2g - 2) or an explicit max_gap and window"""
    r: int = Field(..., ge=1)
    d: int
    g: Optional[int] = Field(None, ge=0)
    max_gap: Optional[str] = Field(None, description='Exact rational, e.g. "2" or "5/2"')
    window: Optional[List[str]] = Field(None, min_length=2, max_length=2)
    max_vertices: Optional[int] = Field(None, ge=2)
    oracle: str = Field("dfs", pattern="^(dfs|bruteforce)$")
    node_cap: Optional[int] = Field(None, gt=0)


def _bad_request(e: FrobstratError) -> HTTPException:
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=e.to_detail())


def constraints_for(request: EnumerateRequest) -> AdmissibilityConstraints:
    if request.g is not None:
        ctx = make_context(2, request.g)
        ctx.require_theorem_range()
        base = admissible_constraints(request.r, request.d, ctx)
        if request.max_vertices is not None:
            base = base.model_copy(update={"max_vertices": request.max_vertices})
        return base
    if request.max_gap is None or request.window is None:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail="give either g or both max_gap and window",
        )
    try:
        return AdmissibilityConstraints(
            max_gap=parse_rational(request.max_gap),
            slope_window=(parse_rational(request.window[0]), parse_rational(request.window[1])),
            max_vertices=request.max_vertices,
        )
    except ValueError as e:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(e))


@router.post("/oper", response_model=PolygonPayload)
async def oper(request: OperRequest):
    """Oper polygon: r equal segments, successive slopes dropping by 2g - 2"""
    try:
        return PolygonPayload.from_polygon(oper_polygon(request.r, request.d, request.g))
    except FrobstratError as e:
        raise _bad_request(e)


@router.post("/dominates", response_model=DominanceResponse)
async def check_dominance(request: DominanceRequest):
    try:
        first, second = request.p1.to_polygon(), request.p2.to_polygon()
        return DominanceResponse(
            dominates=dominates(first, second),
            p1=PolygonPayload.from_polygon(first),
            p2=PolygonPayload.from_polygon(second),
        )
    except FrobstratError as e:
        raise _bad_request(e)


@router.post("/enumerate", response_model=List[PolygonPayload])
def enumerate_admissible(request: EnumerateRequest):
    """
    All admissible polygons ending at (r, d), lexicographically sorted

    Runs in the threadpool since the search is CPU bound.
    """
    try:
        constraints = constraints_for(request)
        if request.oracle == "bruteforce":
            polygons = enumerate_polygons_bruteforce(request.r, request.d, constraints, request.node_cap)
        else:
            polygons = enumerate_polygons(request.r, request.d, constraints, request.node_cap)
        return [PolygonPayload.from_polygon(p) for p in polygons]
    except FrobstratError as e:
        raise _bad_request(e)
