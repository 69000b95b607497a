"""
Domain models for the Frobenius stratification toolkit
"""

from app.models.curve import CurveContext
from app.models.invariants import BundleInvariants
from app.models.polygon import HNPolygon
from app.models.divisor import FormalDivisorExpr
from app.models.poset import AdmissibilityConstraints, StratumPoset
from app.models.report import VerificationReport

__all__ = [
    "CurveContext",
    "BundleInvariants",
    "HNPolygon",
    "FormalDivisorExpr",
    "AdmissibilityConstraints",
    "StratumPoset",
    "VerificationReport",
]
