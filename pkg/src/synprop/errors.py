"""Exception types shared across the package."""


class ContractError(ValueError):
    """A precondition on sizes or boundaries was violated."""


class ResourceLimitError(RuntimeError):
    """An enumeration or search would exceed the configured bound."""


class MonotonicityError(ValueError):
    """A caller-supplied map failed a monotonicity check or did not converge."""
