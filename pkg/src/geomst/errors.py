"""Exception types shared across the package."""


class GeomstError(Exception):
    """Base class for every error this package raises on purpose."""


class UsageError(GeomstError, ValueError):
    """A caller violated an API precondition (bad argument, invalid partition, ...)."""


class DataError(GeomstError, ValueError):
    """Input data could not be ingested or lies outside the supported domain."""


class MetricDomainError(DataError):
    """A metric was evaluated outside its domain, e.g. cosine distance of a zero vector."""
