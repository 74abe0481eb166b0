"""Shared exception types."""


class RegimeError(ValueError):
    """An input falls outside the validity regime of the requested formula.

    Raised when a constant or count is requested for parameters where the
    asymptotic law is not established (wrong number of nonzero coefficients,
    zero level where a nonzero one is required, unsupported sign pattern, ...).
    The message names the violated precondition.
    """
