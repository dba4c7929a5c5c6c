class LadicError(ValueError):
    """Base class for errors raised by this package."""


class ParseError(LadicError):
    """Malformed text input (rationals, elements, cylinders, digit strings)."""


class DomainError(LadicError):
    """Well-formed input outside an operation's domain, e.g. a composite ell."""
