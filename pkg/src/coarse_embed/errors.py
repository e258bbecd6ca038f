"""Exception types shared across the package."""


class CoarseEmbedError(Exception):
    """Base class for all library errors."""


class InvalidVertexId(CoarseEmbedError):
    """A vertex id is outside the declared range."""


class DisconnectedGraph(CoarseEmbedError):
    """The graph has unreachable vertex pairs, so distances are not finite."""


class MetricViolation(CoarseEmbedError):
    """A distance matrix breaks a metric axiom.

    `axiom` names the first axiom violated (in the documented check order)
    and `witness` is the offending index pair or triple.
    """

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class ScheduleMismatch(CoarseEmbedError):
    """Vectors over different exponent schedules cannot be combined."""


class BallTooLarge(CoarseEmbedError):
    """A word-metric ball exceeded the configured element cap."""


class InfeasibleDegree(CoarseEmbedError):
    """No simple regular graph exists for the requested (n, d)."""


class NotConverged(CoarseEmbedError):
    """An iterative solver hit its iteration cap before reaching tolerance."""


class DegenerateEmbedding(CoarseEmbedError):
    """A vertex map collapses every edge, so the edge-stretch ratio is undefined."""


class InputFormatError(CoarseEmbedError):
    """An input file does not parse as the declared format."""
