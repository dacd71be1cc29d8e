"""Exception types shared by every module."""


class MultishiftError(Exception):
    """Base class for library errors."""


class DomainError(MultishiftError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(MultishiftError, ValueError):
    """Parameters are valid on their own but the operation does not apply."""


class GuardExceeded(MultishiftError):
    """A resource guard (size, digits, states) would be exceeded."""


class EnumerationOverflow(GuardExceeded):
    """Exhaustive enumeration found more objects than the cap allows."""


class ConstructionError(MultishiftError, RuntimeError):
    """A constructed sequence failed its own verification."""
