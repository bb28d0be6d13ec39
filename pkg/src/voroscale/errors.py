"""Exception types shared across the package."""


class VoroscaleError(Exception):
    """Base class for all package errors."""


class DegenerateGeometry(VoroscaleError):
    """A polygon or region is degenerate (zero area, too few vertices, NaN)."""


class DegenerateConfiguration(VoroscaleError):
    """Generator points coincide or are otherwise unusable for partitioning."""


class GeneratorOutsideParent(VoroscaleError):
    """A generator point lies outside the region it is meant to partition."""


class OriginOutsideRegion(VoroscaleError):
    """Ray origin is not strictly inside the region."""


class NoIntersection(VoroscaleError):
    """A ray from a region interior found no boundary hit (internal error)."""


class RootHasNoParent(VoroscaleError):
    """parent_of was called on the root index."""


class PointOutsideDomain(VoroscaleError):
    """A query point lies outside the tree's domain."""


class EmptyCell(VoroscaleError):
    """A refinement produced a cell below the minimum area threshold."""


class EmptyQuadrature(VoroscaleError):
    """No raster pixel center falls inside the region being averaged.

    This is the hard resolution-limit signal: refine the raster or cap the
    refinement depth.
    """


class ZeroField(VoroscaleError):
    """The field has zero L2 norm, so norm ratios are undefined."""
