"""Exception hierarchy shared by every subpackage.

Input problems derive from ``ValueError`` so the CLI can report them the same
way it reports a bad input file.
"""


class RefinedTropError(Exception):
    """Base class for all errors raised by the library."""


class InputValidationError(RefinedTropError, ValueError):
    pass


class RankMismatch(InputValidationError):
    pass


class UnknownPolytopeName(InputValidationError):
    pass


class RankNotTwo(InputValidationError):
    pass


class UnsupportedRank(InputValidationError):
    """Convex hulls are only computed in lattice rank <= 3."""


class NotFullDimPolygon(InputValidationError):
    pass


class NotFullRank(RefinedTropError):
    pass


class ZeroCycle(RefinedTropError):
    pass


class YEqualsOne(RefinedTropError, ValueError):
    pass


class DegenerateDisplacement(RefinedTropError):
    pass


class MissingMeasureValue(RefinedTropError):
    def __init__(self, cone):
        self.cone = cone
        super().__init__(f"Todd measure has no value for cone {cone}")


class NonIntegralResult(RefinedTropError):
    pass


class PipelineDisagreement(RefinedTropError):
    def __init__(self, message, results=None):
        self.results = results or {}
        super().__init__(message)
