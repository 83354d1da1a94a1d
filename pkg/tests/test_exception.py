"""
    tests for custom exceptions
"""

from pydfacons import (
    CapacityError,
    ClauseSizeError,
    FormatError,
    InputError,
    InternalConsistencyError,
    LibraryError,
    PreconditionError,
    PurityError,
    StructuralError,
    VerificationError,
)


def test_error():
    lib_err = LibraryError({"message": "error message"})

    assert lib_err.code == -1
    assert lib_err.message == "error message"
    assert "LibraryError" in str(lib_err)

    err = InputError({"message": "bad symbol", "symbol": "c", "position": 2})
    assert err.code == 3
    assert err.symbol == "c"
    assert err.position == 2
    assert "position=2" in repr(err)

    default = PreconditionError({})
    assert default.message == "exception in library"


def test_error_codes():
    codes = {
        InputError: 3,
        PurityError: 4,
        ClauseSizeError: 5,
        FormatError: 6,
        CapacityError: 7,
        PreconditionError: 8,
        StructuralError: 9,
        VerificationError: 10,
        InternalConsistencyError: 11,
    }
    for cls, code in codes.items():
        assert cls({"message": "x"}).code == code
        assert issubclass(cls, LibraryError)

    for cls in (PurityError, ClauseSizeError, FormatError):
        assert issubclass(cls, InputError)
