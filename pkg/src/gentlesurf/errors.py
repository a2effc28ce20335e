"""Exception hierarchy shared by all modules.

Every domain failure derives from :class:`GentleSurfError`; the CLI maps these
to exit code 1 and reports the class name.
"""


class GentleSurfError(Exception):
    pass


# surfaces
class InvalidTriangulation(GentleSurfError):
    pass


class NotInternalArc(GentleSurfError):
    pass


class TooFewMarkedPoints(GentleSurfError):
    pass


# quivers
class UnknownVertex(GentleSurfError):
    pass


class LoopAtVertex(GentleSurfError):
    pass


class TwoCycleAtVertex(GentleSurfError):
    pass


class TwoCyclePresent(GentleSurfError):
    pass


# gentle algebras
class NotGentle(GentleSurfError):
    pass


class NotTiltedAOrAtilde(GentleSurfError):
    pass


class RelationOffCycle(GentleSurfError):
    pass


class VertexMultiplicityExceeded(GentleSurfError):
    pass


class InconsistentGluing(GentleSurfError):
    pass


# strings and bands
class NonComposableWalk(GentleSurfError):
    pass


class HypothesisViolated(GentleSurfError):
    pass


class WordNotString(GentleSurfError):
    pass


class WordNotBand(GentleSurfError):
    pass


# curves
class NotReduced(GentleSurfError):
    pass


class NotReducedClosed(GentleSurfError):
    pass


class ArcHomotopicCurve(GentleSurfError):
    pass
