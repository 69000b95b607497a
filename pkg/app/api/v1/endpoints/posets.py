"""
Stratum poset endpoints
"""

from typing import List, Optional

from fastapi import APIRouter, HTTPException, status
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from app.core.exceptions import FrobstratError
from app.models.poset import StratumPoset
from app.schemas.polygon import PolygonPayload, PosetPayload
from app.services.arithmetic import make_context
from app.services.enumeration import admissible_polygons, build_poset
from app.services.rendering import poset_to_dot

router = APIRouter()


class PosetRequest(BaseModel):
    """Explicit polygons, or (r, d, g) to enumerate the admissible family"""
    polygons: Optional[List[PolygonPayload]] = None
    r: Optional[int] = Field(None, ge=1)
    d: Optional[int] = None
    g: Optional[int] = Field(None, ge=0)
    node_cap: Optional[int] = Field(None, gt=0)


def _poset_for(request: PosetRequest) -> StratumPoset:
    if request.polygons is not None:
        return build_poset([p.to_polygon() for p in request.polygons])
    if request.r is None or request.d is None or request.g is None:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail="give polygons or all of r, d, g",
        )
    ctx = make_context(2, request.g)
    return build_poset(admissible_polygons(request.r, request.d, ctx, request.node_cap))


@router.post("", response_model=PosetPayload, response_model_exclude_none=True)
def poset(request: PosetRequest):
    try:
        return PosetPayload.from_poset(_poset_for(request))
    except FrobstratError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=e.to_detail())


@router.post("/dot", response_class=PlainTextResponse)
def poset_dot(request: PosetRequest):
    """Hasse diagram as a DOT digraph"""
    try:
        return poset_to_dot(_poset_for(request))
    except FrobstratError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=e.to_detail())
