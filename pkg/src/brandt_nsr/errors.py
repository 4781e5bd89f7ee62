"""Exception types shared across the package."""


class BrandtNsrError(Exception):
    """Base class for all errors raised by this package."""


class GenerationError(BrandtNsrError):
    """Raised when element generation produces something it should not."""


class ValidationError(BrandtNsrError):
    """Raised when a finished operation table violates a structural invariant."""


class CacheError(BrandtNsrError):
    """Raised when a cache file cannot be trusted (format, checksum, content)."""


class LatticeTooLarge(BrandtNsrError):
    """Raised when a congruence lattice exceeds the caller's size limit."""
