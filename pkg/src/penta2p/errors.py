"""Exception hierarchy.

Every error raised by the library derives from :class:`Penta2pError` so the
CLI can map the whole family to exit status 2 in one place.
"""


class Penta2pError(Exception):
    """Base class for all library errors."""


# graph-core
class OutOfRange(Penta2pError, ValueError):
    pass


class LoopEdge(Penta2pError, ValueError):
    pass


class FullRemoval(Penta2pError, ValueError):
    pass


class NonPositiveK(Penta2pError, ValueError):
    pass


# plane-map
class InvalidMap(Penta2pError, ValueError):
    """A rotation system that fails :func:`penta2p.planemap.validate_map`."""


class NotTwoConnected(Penta2pError, ValueError):
    pass


class NotThreeConnected(Penta2pError, ValueError):
    pass


# generators
class TooSmall(Penta2pError, ValueError):
    pass


class BadGadget(Penta2pError, ValueError):
    pass


# op2planar
class NotPentagulation(Penta2pError, ValueError):
    pass


class DuplicateEdge(Penta2pError, ValueError):
    pass


# stellation / theorem checks
class TheoremViolation(Penta2pError, AssertionError):
    """A proven statement failed on an input satisfying its hypotheses.

    This always means a bug in this package, never bad input.
    """


# hamiltonicity
class SameEndpoints(Penta2pError, ValueError):
    pass


class GirthTooSmall(Penta2pError, ValueError):
    pass


class SearchExhausted(TheoremViolation):
    pass


class Indeterminate(Penta2pError, RuntimeError):
    """The exact search hit its node budget before deciding."""


class EndpointStellating(Penta2pError, ValueError):
    pass


class AdjacentStellating(Penta2pError, ValueError):
    pass


class MissingEdge(Penta2pError, ValueError):
    pass


class InvalidWitness(Penta2pError, ValueError):
    pass


class BadCut(Penta2pError, ValueError):
    pass


# cli / io
class UnsupportedFormat(Penta2pError, ValueError):
    pass
