"""Exception types shared across the package.

Two error families matter to callers (and to the CLI exit codes):
malformed or invariant-violating input data, and refusals where a
computation's precondition does not hold for an otherwise valid domain.
"""


class ToricapError(Exception):
    """Base class for all library errors."""


class DomainError(ToricapError):
    """Input document or domain data violates the schema or an invariant."""


class InapplicableError(ToricapError):
    """A precondition fails, so the requested value cannot be certified."""
