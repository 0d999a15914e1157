"""Exception types shared across the package."""


class EffortError(RuntimeError):
    """A computation ran out of its work-unit budget.

    When a partial result exists (e.g. a classification with some flags
    undecided) it is attached as the ``partial`` attribute.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ContractViolationError(RuntimeError):
    """A mathematically guaranteed invariant failed at runtime."""
