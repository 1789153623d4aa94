"""Exception types shared across the package."""


class SizeError(ValueError):
    """Register or matrix size outside the supported range."""


class ShapeError(ValueError):
    """Two objects disagree on qubit count."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""
