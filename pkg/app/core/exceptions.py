"""
Domain error taxonomy

Every error is a ValueError so callers that only know the service-layer
convention keep working; `name` is what the CLI and the API report.
"""


class FrobstratError(ValueError):
    """Base class for all domain errors"""

    name = "FrobstratError"

    def to_detail(self) -> dict:
        return {"error": self.name, "message": str(self)}


class NonPrimeCharacteristic(FrobstratError):
    name = "NonPrimeCharacteristic"


class NegativeGenus(FrobstratError):
    name = "NegativeGenus"


class GenusTooSmall(FrobstratError):
    name = "GenusTooSmall"


class NotConvex(FrobstratError):
    name = "NotConvex"


class BadEndpoints(FrobstratError):
    name = "BadEndpoints"


class IndivisibleDegree(FrobstratError):
    name = "IndivisibleDegree"


class EndpointMismatch(FrobstratError):
    name = "EndpointMismatch"


class BudgetExceeded(FrobstratError):
    name = "BudgetExceeded"


class InvalidDivisor(FrobstratError):
    """Malformed divisor expression or a point map missing part of the support"""

    name = "InvalidDivisor"


class ShapeMismatch(FrobstratError):
    """Polygon does not have the shape of a canonical filtration"""

    name = "ShapeMismatch"
