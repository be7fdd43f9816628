"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented invariant."""


class PrecisionExhaustedError(ArithmeticError):
    """The order-by-order recursion produced non-finite coefficients."""

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"non-finite coefficients at order {order}")


class NoStationaryPointError(RuntimeError):
    """No stationary point of the energy was found inside the search bracket."""


class ConvergenceError(RuntimeError):
    """A numerical refinement loop hit its resource cap."""

    def __init__(self, message, bracket=None):
        self.bracket = bracket
        super().__init__(message)
