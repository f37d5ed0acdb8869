"""Exception types raised across the package."""


class FieldMismatchError(TypeError):
    """Two values from different ground fields were combined."""


class DimensionError(ValueError):
    """Shapes of matrices, vectors or tables do not conform."""


class SingularMatrixError(ArithmeticError):
    """A square matrix has no inverse."""


class AlgebraValidationError(ValueError):
    """Structure constants, unit or grading violate an algebra invariant."""


class UnsupportedFieldError(ValueError):
    """The requested check is not sound over the given field."""


class TruncationError(ValueError):
    """A symbolic product produced a word longer than the degree bound."""


class BudgetError(ValueError):
    """A computation would exceed a configured size budget."""

    def __init__(self, quantity, value, limit):
        self.quantity = quantity
        self.value = value
        self.limit = limit
        super().__init__(f"{quantity} = {value} exceeds the budget of {limit}")
