"""Shared exception types for the package."""


class BudgetError(ValueError):
    """A request exceeds a hard computational budget (oracle or scan cap)."""


class OrbitSplitError(ValueError):
    """A balanced construction needs every class orbit divisible by p,
    which fails exactly when p divides n."""


class InternalCheckError(RuntimeError):
    """Two supposedly equivalent internal computations disagreed."""
