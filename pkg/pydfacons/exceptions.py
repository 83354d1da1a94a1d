"""
    Exceptions for library
"""


class DfaConsException(Exception):
    """Base class for exceptions in this module."""

    pass


class LibraryError(DfaConsException):
    """
    A class for library error template.

    Every key of the given dict becomes an attribute, so callers can attach
    context like the offending symbol, clause index or file line.
    """

    default_code = -1

    def __init__(self, kwargs: dict):
        self.code = self.default_code  # also the cli exit status
        self.message = "exception in library"
        for key, value in kwargs.items():
            setattr(self, key, value)

    def __repr__(self):
        msg = ",".join(
            [f"{k}={v}" for k, v in self.__dict__.items() if not k.startswith("_")]
        )
        return f"{self.__class__.__name__}({msg})"

    def __str__(self):
        return self.__repr__()


class InputError(LibraryError):
    """Invalid word, sample, formula or argument."""

    default_code = 3


class PurityError(InputError):
    """A clause mixes positive and negative literals."""

    default_code = 4


class ClauseSizeError(InputError):
    """A clause has more than three distinct variables."""

    default_code = 5


class FormatError(InputError):
    """A sample file, DFA table file or DOT text does not follow its grammar."""

    default_code = 6


class CapacityError(LibraryError):
    """An exhaustive enumeration was asked for beyond its guard."""

    default_code = 7


class PreconditionError(LibraryError):
    """An operation was called on arguments outside of its contract."""

    default_code = 8


class StructuralError(LibraryError):
    """
    A DFA that passed the preconditions does not have the shape the
    reduction proof guarantees. Signals a caller bug.
    """

    default_code = 9


class VerificationError(LibraryError):
    """A reproduction check failed."""

    default_code = 10


class InternalConsistencyError(LibraryError):
    """The backtracking solver and the enumeration oracle disagree."""

    default_code = 11
