"""Typed error hierarchy.

Every failure mode has its own class so callers (and the CLI) can react to
the *name* of the error rather than parsing messages.
"""


class DyckError(Exception):
    """Base class for all errors raised by this package."""


class IllegalCharacter(DyckError):
    """Path text contains a symbol other than U or D."""


class Unbalanced(DyckError):
    """Path text does not have equally many U and D steps."""


class InvalidPeakList(DyckError):
    """Peak coordinates violate monotonicity or range constraints."""


class EmptyPath(DyckError):
    """Operation needs at least one step."""


class DomainError(DyckError):
    """A map was applied outside its declared domain."""


class NoBelowStep(DomainError):
    """Decomposition needs a step below the diagonal, but the path has none."""


class NotInImage(DomainError):
    """The path has no preimage under the requested map."""


class NotInHatDU(DomainError):
    """The path is not in the image of the rotation map g."""


class InexactDivision(DyckError):
    """A closed-form evaluation hit a division with nonzero remainder."""


class ResourceBound(DyckError):
    """Requested semilength exceeds the configured enumeration ceiling."""
