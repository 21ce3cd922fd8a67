"""Exception types shared across the package."""


class DomainError(ValueError):
    """Structurally nonsensical input (k < 2, negative sizes, ...)."""


class RangeError(ValueError):
    """Input is well-formed but outside the range a formula is valid for."""


class SplitError(ValueError):
    """An epsilon decomposition that does not satisfy its invariants."""
