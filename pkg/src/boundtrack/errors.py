"""Exception types shared across the package."""


class BoundtrackError(Exception):
    """Base class for all package errors."""


class InvalidPolygon(BoundtrackError):
    pass


class InvalidConfig(BoundtrackError):
    pass


class ParseError(BoundtrackError):
    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}"
            if line is not None:
                loc += f":{line}"
            loc += ": "
        super().__init__(loc + message)
        self.path = path
        self.line = line


class TooFewPoints(BoundtrackError):
    pass


class AllCollinear(BoundtrackError):
    pass


class TooFewSegments(BoundtrackError):
    pass


class TooFewDetectedEdges(BoundtrackError):
    pass


class ZeroArea(BoundtrackError):
    pass


class NoCandidates(BoundtrackError):
    pass


class NoSimilarCandidate(BoundtrackError):
    """No cycle candidate passed the area-similarity gate.

    Carries the lowest-cost candidate found (if any) for diagnostics.
    """

    def __init__(self, best=None):
        super().__init__("no candidate passed the area-similarity gate")
        self.best = best


class EmptyMask(BoundtrackError):
    pass


class PolygonEscapesFrame(BoundtrackError):
    pass
