"""Exception types shared by every module."""


class XformError(Exception):
    """Base class; ``module`` names the subsystem that raised."""

    def __init__(self, message, module="mobius_xform"):
        super().__init__(message)
        self.module = module

    def __str__(self):
        return f"[{self.module}] {self.args[0]}"


class DomainError(XformError, ValueError):
    """An argument lies outside the domain of an operation."""


class DegenerateWeightError(XformError, ArithmeticError):
    """Retained interpolation weights sum to (numerically) zero."""
