"""Exceptions shared across the library."""


class OctokernelsError(Exception):
    """Base class for library errors."""


class SingularityError(OctokernelsError):
    """Evaluation requested inside the guard band around a singular set.

    ``singular_set`` names the offending set (e.g. ``"x in [conj(y)^-1]"``)
    so the CLI can print a useful diagnostic.
    """

    def __init__(self, message, singular_set=None):
        super().__init__(message)
        self.singular_set = singular_set


class OutsideDomainError(OctokernelsError):
    """A point was required to be interior to a domain but is not."""
