"""Exception types shared by every module."""


class SsmKitError(Exception):
    """Base class for all errors raised by ssm_kit."""


class ArgumentError(SsmKitError, ValueError):
    """An argument violates an operation's precondition."""


class ConfigurationError(SsmKitError, ValueError):
    """A substitution or job refers to something that does not exist."""


class InternalConsistencyError(SsmKitError, ArithmeticError):
    """A result that must be exact (a polynomial, a fixpoint) was not.

    Raised only when an identity guaranteed by the mathematics fails, so it
    always signals a bug rather than bad input.
    """
