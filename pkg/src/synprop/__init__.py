"""Finite PROPs generated by a binary splitting operation.

The package builds the free PROP on one generator 1 -> 2, its quotient by
ancestry (connected components of the boundary), finite corelations, cospans
of finite sets with their Frobenius structure, and a small powerset logic
with Knaster-Tarski fixed points.
"""

from synprop.errors import ContractError, MonotonicityError, ResourceLimitError

__version__ = "0.1.0"

__all__ = ["ContractError", "MonotonicityError", "ResourceLimitError", "__version__"]
