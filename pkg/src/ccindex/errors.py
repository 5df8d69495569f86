"""Exception types shared across the package."""


class CollisionError(ValueError):
    """Two bodies coincide (or come closer than the collision guard)."""


class DegenerateInputError(ValueError):
    """An input is degenerate for the requested operation (e.g. a zero configuration)."""


class PreconditionError(ValueError):
    """A documented precondition of an operation is violated."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree beyond tolerance."""


class UndefinedIndexError(RuntimeError):
    """The fixed point index is requested at a degenerate critical point."""


class SpecFileError(ValueError):
    """A problem-specification file failed validation."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
