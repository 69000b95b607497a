"""
Main API router for v1 endpoints
"""

from fastapi import APIRouter

from app.api.v1.endpoints import invariants, polygons, posets, verification

api_router = APIRouter()

api_router.include_router(invariants.router, prefix="/invariants", tags=["invariants"])
api_router.include_router(polygons.router, prefix="/polygons", tags=["polygons"])
api_router.include_router(posets.router, prefix="/posets", tags=["posets"])
api_router.include_router(verification.router, prefix="/verify", tags=["verification"])
