"""Exception types shared across the package."""

from __future__ import annotations


class Error(Exception):
    """Base class for every error raised by this package."""


class MonomialParseError(Error, ValueError):
    """Raised when a monomial string does not follow the surface grammar.

    ``position`` is the 0-based offset of the first offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotDivisibleError(Error, ArithmeticError):
    """Raised by exact division when the divisor does not divide the dividend."""


class FormatError(Error, ValueError):
    """Raised when serialized input (JSON documents, ideal text) is malformed."""


class ValidationError(Error, ValueError):
    """A family of atom sets is not a finite atomic lattice.

    Carries the full diagnosis: ``missing_required`` lists absent mandatory
    sets (empty set, singletons, full set) and ``non_closed_pairs`` lists
    pairs of member sets whose intersection is missing from the family.
    Both are given as sorted tuples of 1-based atom indices.
    """

    def __init__(self, message, missing_required=(), non_closed_pairs=()):
        super().__init__(message)
        self.missing_required = tuple(missing_required)
        self.non_closed_pairs = tuple(non_closed_pairs)


class NotAnElementError(Error, KeyError):
    """An atom set was used with a lattice it does not belong to."""


class IncomparableError(Error, ValueError):
    """Interval endpoints are not ordered (the lower set is not contained in the upper)."""


class DegenerateIdealError(Error, ValueError):
    """The unit monomial is (or would be) a generator, so no lcm lattice exists."""


class PreconditionError(Error, ValueError):
    """An operation's documented precondition does not hold for the given input."""


class CapExceededError(Error, ValueError):
    """Input size exceeds a documented safety cap (atom count, generator count, ...)."""
