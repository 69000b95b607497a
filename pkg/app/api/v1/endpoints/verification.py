"""
Claim verification endpoint
"""

from fastapi import APIRouter, HTTPException, status

from app.core.exceptions import FrobstratError
from app.schemas.report import ReportPayload, VerifyRequest
from app.services.arithmetic import make_context
from app.services.verification import CLAIMS, run_claim

router = APIRouter()


@router.post("", response_model=ReportPayload, response_model_exclude_none=True)
def verify(request: VerifyRequest):
    """
    Check one claim at the polygon level

    - Unknown claim names are rejected with 422
    - Failing reports still return 200 with passed=false and witnesses
    """
    if request.claim not in CLAIMS:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"unknown claim {request.claim!r}; choose from {sorted(CLAIMS)}",
        )
    try:
        ctx = make_context(request.p, request.g)
        report = run_claim(request.claim, ctx, request.r, request.d, request.node_cap)
        return ReportPayload.from_report(report)
    except FrobstratError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=e.to_detail())
