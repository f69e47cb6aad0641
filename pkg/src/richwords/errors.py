"""Exception types shared across the package.

``DomainError`` subclasses signal bad input (the CLI maps them to exit code 1).
``InternalInconsistency`` signals a broken internal invariant and is never
expected on valid input; ``ResourceLimit`` signals a blown resource cap.
"""

from __future__ import annotations


class DomainError(ValueError):
    """Base class for rejections of mathematically invalid input."""


class LengthViolation(DomainError):
    """The word is too short for the requested operation."""


class AlphabetMismatch(DomainError):
    """Two words that must share an alphabet do not."""


class EmptyPattern(DomainError):
    """An occurrence pattern must be nonempty."""


class NotAFactor(DomainError):
    """The pattern does not occur in the word."""


class NotAPrefix(DomainError):
    """The second word is not a prefix of the first."""


class NotRich(DomainError):
    """The word is not palindromically rich."""


class NotAFlexedPalindrome(DomainError):
    """The palindrome is not a flexed palindrome of the word."""


class NotReducible(DomainError):
    """The (word, palindrome) pair fails a reducibility condition.

    Carries the structured rejection so callers can report which of the five
    conditions failed first.
    """

    def __init__(self, rejection):
        super().__init__(str(rejection))
        self.rejection = rejection


class PreconditionViolation(DomainError):
    """A documented operation precondition does not hold."""


class InternalInconsistency(RuntimeError):
    """A guaranteed internal invariant failed; indicates an implementation bug."""


class ResourceLimit(RuntimeError):
    """An explicit resource cap (digit count, iteration count) was exceeded."""
