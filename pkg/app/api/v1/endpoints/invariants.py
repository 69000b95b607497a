"""
Bundle invariant endpoints
"""

from fastapi import APIRouter, HTTPException, status

from app.core.exceptions import FrobstratError
from app.models.invariants import BundleInvariants
from app.models.rational import format_rational
from app.schemas.invariants import (
    DeterminantRequest,
    DeterminantResponse,
    InvariantsPayload,
    InvariantsRequest,
    ProfileResponse,
)
from app.services.arithmetic import (
    canonical_filtration_profile,
    make_context,
    pullback_invariants,
    pushforward_determinant,
    pushforward_invariants,
    pushforward_slope,
    total_invariants,
)

router = APIRouter()


def _bad_request(e: FrobstratError) -> HTTPException:
    return HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=e.to_detail())


@router.post("/push", response_model=InvariantsPayload, response_model_exclude_none=True)
async def push(request: InvariantsRequest):
    """(r, d) of E to (p r, p d + r (p - 1)(g - 1)) of F_* E, with its slope"""
    try:
        ctx = make_context(request.p, request.g)
        inv = BundleInvariants(rank=request.r, degree=request.d)
        pushed = pushforward_invariants(inv, ctx)
        return InvariantsPayload(
            rank=pushed.rank,
            degree=pushed.degree,
            slope=format_rational(pushforward_slope(inv, ctx)),
        )
    except FrobstratError as e:
        raise _bad_request(e)


@router.post("/pull", response_model=InvariantsPayload, response_model_exclude_none=True)
async def pull(request: InvariantsRequest):
    try:
        ctx = make_context(request.p, request.g)
        inv = BundleInvariants(rank=request.r, degree=request.d)
        return InvariantsPayload.from_invariants(pullback_invariants(inv, ctx), with_slope=True)
    except FrobstratError as e:
        raise _bad_request(e)


@router.post("/canfil", response_model=ProfileResponse, response_model_exclude_none=True)
async def canonical_filtration(request: InvariantsRequest):
    """
    Graded pieces of the canonical filtration of F^* F_* E

    - Ordered from the steepest piece (l = p - 1) down to E itself
    - total equals the invariants of F^* F_* E
    """
    try:
        ctx = make_context(request.p, request.g)
        gradeds = canonical_filtration_profile(BundleInvariants(rank=request.r, degree=request.d), ctx)
        return ProfileResponse(
            gradeds=[InvariantsPayload.from_invariants(x, with_slope=True) for x in gradeds],
            total=InvariantsPayload.from_invariants(total_invariants(gradeds)),
        )
    except FrobstratError as e:
        raise _bad_request(e)


@router.post("/detpush", response_model=DeterminantResponse)
async def determinant(request: DeterminantRequest):
    """Symbolic det(f_* E) = det(f_* O)^rank (x) O(f_* D)"""
    try:
        expr = pushforward_determinant(request.rank, request.divisor, request.point_map)
        return DeterminantResponse.from_expr(expr)
    except FrobstratError as e:
        raise _bad_request(e)
