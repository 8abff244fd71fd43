"""Exception types shared across the package."""


class PseudoTriError(Exception):
    """Base class for every error this library raises on purpose."""


class InvalidPointSet(PseudoTriError):
    """Point set breaks a construction invariant (size, duplicates, collinearity)."""


class FileFormatError(PseudoTriError):
    """Malformed points/edges file; the message cites the offending line."""


class CrossingEdges(PseudoTriError):
    """Two edges of a would-be graph share a point other than a common endpoint."""


class DisconnectedGraph(PseudoTriError):
    """Operation needs a connected graph."""


class IsolatedVertex(PseudoTriError):
    """Operation needs the vertex to have at least one incident edge."""


class NotAPseudoTriangulation(PseudoTriError):
    """Graph failed pseudo-triangulation validation."""


class NotAPPT(PseudoTriError):
    """Graph is a pseudo-triangulation but some vertex is not pointed."""


class NotPointedInput(PseudoTriError):
    """Completion input already contains a non-pointed vertex."""


class HullEdgeNotFlippable(PseudoTriError):
    """Flips are defined for interior edges only."""


class NotAHullEdge(PseudoTriError):
    """Mechanism analysis removes a convex hull edge; something else was given."""


class UnexpectedDofCount(PseudoTriError):
    """Pinned flex space of a cut framework was not one-dimensional."""


class LimitExceeded(PseudoTriError):
    """Requested exhaustive work beyond the configured size limit."""
