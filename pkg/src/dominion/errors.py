"""Exception types shared across the package."""


class DominionError(Exception):
    """Base class for all domain errors raised by this package."""


class IndexOutOfRange(DominionError):
    pass


class SelfLoop(DominionError):
    pass


class WitnessShapeMismatch(DominionError):
    pass


class CodomainViolation(DominionError):
    pass


class IsolatedVertex(DominionError):
    pass


class UndefinedParameter(DominionError):
    pass


class InfeasibleSource(DominionError):
    pass


class SideConditionViolated(DominionError):
    pass


class SizeBelowThreshold(DominionError):
    pass


class InvalidInstance(DominionError):
    pass


class InfeasibleWitness(DominionError):
    pass


class BudgetExhausted(DominionError):
    """Raised when the search node budget runs out.

    Carries the best incumbent weight found so far (or None).
    """

    def __init__(self, message, incumbent=None):
        super().__init__(message)
        self.incumbent = incumbent
