"""Exception hierarchy shared by all modules."""


class ZetaExplicitError(Exception):
    """Base class."""


class DomainError(ZetaExplicitError, ValueError):
    """Argument outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation at a pole."""


class BranchCutError(DomainError):
    """Evaluation on a branch cut."""


class PrecisionError(ZetaExplicitError):
    """Requested error budget cannot be met."""


class IntegrityError(ZetaExplicitError):
    """Zero table is malformed (non-monotone, duplicated, ...)."""


class FormatError(ZetaExplicitError):
    """A line of an input file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class CapabilityError(ZetaExplicitError):
    """A required derivative or feature is unavailable."""


class InconsistentOrderError(ZetaExplicitError):
    """Claimed pole order contradicts the denominator data."""


class AccuracyError(ZetaExplicitError):
    """Numerical procedure failed to converge to the requested accuracy."""


class SingularityError(ZetaExplicitError):
    """Evaluation too close to a singularity."""


class SimplicityError(ZetaExplicitError):
    """A zero that should be simple appears to be multiple."""


class CapacityError(ZetaExplicitError):
    """Not enough zeros available for the request."""


class ContractError(ZetaExplicitError):
    """Inputs violate a documented precondition."""


class SearchError(ZetaExplicitError):
    """No extremum found in the search window."""
