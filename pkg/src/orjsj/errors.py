"""Exception hierarchy shared by every module."""


class OrjsjError(Exception):
    """Base class for all errors raised by the package."""


class EmptyWordError(OrjsjError, ValueError):
    pass


class ParseError(OrjsjError, ValueError):
    """Bad token or structure in word text; ``position`` is a 0-based offset."""

    def __init__(self, position, message):
        self.position = position
        self.message = message
        super().__init__(f"at position {position}: {message}")


class NotInSubgroupError(OrjsjError, ValueError):
    pass


class NotInDerivedSubgroupError(OrjsjError, ValueError):
    pass


class EmptyInputError(OrjsjError, ValueError):
    pass


class NotASummandError(OrjsjError):
    """The unit square is not a Minkowski summand of the given polygon."""


class CardinalityBlownError(OrjsjError):
    """An orbit set outgrew the linear sanity bound."""


class BudgetExhaustedError(OrjsjError):
    """An exhaustive search hit its node budget before finishing."""


class GenerationError(OrjsjError):
    pass


class JsjUndefinedError(OrjsjError):
    """No Z_max-JSJ decomposition is defined or computable for this input."""


class OutUndefinedError(OrjsjError):
    pass
