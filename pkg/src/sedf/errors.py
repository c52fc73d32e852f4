"""Exception hierarchy for the sedf package.

Every error raised by the library derives from SedfError so callers (and the
CLI) can distinguish domain failures from programming errors.
"""


class SedfError(Exception):
    """Base class for all sedf-specific errors."""


class LoopEdge(SedfError):
    """An edge joins a vertex to itself."""


class DuplicateEdge(SedfError):
    """The same unordered vertex pair appears twice in an edge list."""


class IndexOutOfRange(SedfError):
    """A vertex or edge index is outside the valid range."""


class ZeroPart(SedfError):
    """A complete bipartite graph was requested with an empty part."""


class LabelingGraphMismatch(SedfError):
    """An edge labeling was used with a graph it is not bound to."""


class OverflowGuard(SedfError):
    """A construction would exceed the configured maximum size."""


class NotAnLGraph(SedfError):
    """A partitioned graph does not have the clique-plus-matchings layer structure."""


class CaseRangeViolation(SedfError):
    """Construction parameters fall outside the sub-case range they require."""


class UnknownConstruction(SedfError):
    """An unrecognized construction identifier was requested."""


class InvalidSubgraph(SedfError):
    """An elementary subgraph is inconsistent with its host graph."""


class NotAnSedf(SedfError):
    """A labeling that must be a signed edge domination function is not one."""


class NotACycle(SedfError):
    """A vertex sequence does not describe a cycle of the graph."""


class FormatError(SedfError):
    """A graph or labeling text file is malformed."""
