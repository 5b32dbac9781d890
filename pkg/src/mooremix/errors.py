"""Exception types shared across the package."""


class MooremixError(Exception):
    """Base class for all package-specific errors."""


class GraphError(MooremixError):
    """Invalid mixed-graph construction."""


class SelfLoopError(GraphError):
    pass


class DuplicateError(GraphError):
    pass


class DigonConflictError(GraphError):
    """The arc set contains both (u, v) and (v, u)."""


class ParallelArcEdgeError(GraphError):
    """An arc runs parallel to an existing edge."""


class LabelOutOfRangeError(GraphError):
    pass


class DegenerateParametersError(MooremixError):
    """Closed-form bound is undefined for these degrees (directed or undirected cycle)."""


class SizeLimitExceededError(MooremixError):
    """Graph too large for the exact canonical-labeling routines."""


class CapExceededError(MooremixError):
    """Requested search order exceeds the configured cap."""


class MgfFormatError(MooremixError):
    """Malformed MGF file."""
