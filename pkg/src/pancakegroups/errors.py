"""Exception types raised across the package."""


class PancakeError(ValueError):
    """Base class for invalid input to any operation in this package."""


class DegreeError(PancakeError):
    """Degree outside the allowed domain, or two operands of different degree."""


class FamilyError(PancakeError):
    """Operands from different families (unsigned vs signed)."""


class SubscriptError(PancakeError):
    """Generator subscript outside the legal range."""


class ParseError(PancakeError):
    pass


class ResourceCapError(PancakeError):
    """Requested enumeration exceeds a configured size cap."""

    def __init__(self, message: str, estimate: int | None = None):
        super().__init__(message)
        self.estimate = estimate
