"""Exception hierarchy.

Every error raised on purpose by the library derives from ``EllsurfError`` so
the CLI can map it to a usage error without swallowing genuine bugs.
"""


class EllsurfError(ValueError):
    """Base class for domain errors."""


class ZeroInput(EllsurfError):
    pass


class NotPrime(EllsurfError):
    pass


class BadPrime(EllsurfError):
    pass


class BothZero(EllsurfError):
    pass


class BothZeroPolys(EllsurfError):
    pass


class ZeroPoly(EllsurfError):
    pass


class SingularSurface(EllsurfError):
    pass


class SingularFiber(EllsurfError):
    pass


class SingularCurve(EllsurfError):
    pass


class PointNotOnCurve(EllsurfError):
    pass


class NotIntegralAfterScaling(EllsurfError):
    pass


class NonIntegralModel(EllsurfError):
    pass


class Inconclusive(EllsurfError):
    """Torsion order could not be decided within the multiples bound."""


class NoCMRepresentation(EllsurfError):
    pass


class NotCoprime(EllsurfError):
    pass


class GoodReduction(EllsurfError):
    pass


class NotDegreeFour(EllsurfError):
    pass


class LeadingNotSquare(EllsurfError):
    pass


class NotDepressed(EllsurfError):
    pass


class PolySyntaxError(EllsurfError):
    pass
