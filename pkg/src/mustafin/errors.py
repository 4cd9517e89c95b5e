"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Vector or matrix shape does not match the ambient dimension."""


class ContractError(ValueError):
    """A documented precondition was violated by the caller."""


class DegenerateSegmentError(ContractError):
    """Both endpoints of a tropical segment coincide."""


class DomainError(ValueError):
    """A point lies outside the tropical convex hull it was quoted on."""


class UndefinedMapError(ContractError):
    """Some factor kernel equals the full space, so the rational map is nowhere defined."""


class InvariantViolationError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ParseError(ValueError):
    """A configuration document could not be read."""
