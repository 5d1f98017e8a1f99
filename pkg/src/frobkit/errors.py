"""Exception hierarchy shared by every frobkit module."""


class FrobkitError(Exception):
    """Base class for all library errors."""


class DomainError(FrobkitError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ContractError(FrobkitError, ValueError):
    """Operands violate a structural precondition (mismatched base, bad index...)."""


class RadixOverflowError(DomainError):
    """An integer does not fit in the requested number of places."""


class ResourceError(FrobkitError, RuntimeError):
    """A configured resource cap would be exceeded."""
