"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class PrecisionError(ArithmeticError):
    """A requested tolerance cannot be met at the available precision."""


class BudgetError(PrecisionError):
    """A series needed more terms than the configured budget allows."""


class QuadratureError(ArithmeticError):
    """A quadrature did not reach its error target."""


class RangeError(OverflowError):
    """An argument is too large (or not finite) to evaluate."""
