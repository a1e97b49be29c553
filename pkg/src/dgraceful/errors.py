"""Exception types shared across the package."""


class NotAdmissible(ValueError):
    """Raised when ``d`` does not divide the edge count, or a family rejects ``d``."""


class NotBipartite(ValueError):
    """Raised when an operation needs a bipartition and the graph has an odd cycle."""


class VerificationError(RuntimeError):
    """A construction produced a labeling that failed re-verification."""


class BudgetExceeded(RuntimeError):
    """An existence query ran out of search nodes before reaching an answer."""
