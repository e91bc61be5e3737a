"""Exception types shared across the package."""


class CvtGrtError(Exception):
    """Base class for all package errors."""


class DegenerateGeometryError(CvtGrtError):
    """Polygon is degenerate (too few vertices, zero area, wrong orientation...)."""


class DuplicateGeneratorError(CvtGrtError):
    """Two generators are closer than the geometric tolerance."""


class OutOfDomainError(CvtGrtError):
    """A point or generator lies outside the domain it must belong to."""


class InvalidPartitionError(CvtGrtError):
    """User-supplied convex pieces do not partition the target domain."""


class UnknownFunctionError(CvtGrtError):
    """Requested test-function name is not in the catalog."""


class ConfigError(CvtGrtError):
    """Run configuration failed schema or semantic validation."""
