"""Exception taxonomy shared by every fsplit module.

All library errors derive from FsplitError so callers (and the CLI exit-code
mapping) can distinguish mathematical precondition failures from budget stops.
"""

from __future__ import annotations


class FsplitError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(FsplitError):
    """Operands belong to different coefficient fields."""


class RingMismatch(FsplitError):
    """Operands belong to different polynomial rings."""


class DivisionByZero(FsplitError, ZeroDivisionError):
    """Division by the zero element of a field."""


class ExponentOverflow(FsplitError, OverflowError):
    """A monomial exponent left the supported 16-bit range."""


class ZeroDivisorColon(FsplitError):
    """Colon ideal requested against the zero ideal."""


class NotArtinian(FsplitError):
    """A length was requested for a quotient of infinite length."""


class NotGorenstein(FsplitError):
    """The socle is not one-dimensional."""


class InvalidSocle(FsplitError):
    """A user-supplied element does not generate the socle."""


class NotContaining(FsplitError):
    """The ideal is not contained in the given coordinate prime."""


class NotHomogeneous(FsplitError):
    """An operation restricted to homogeneous ideals got an inhomogeneous one."""


class MissingFlag(FsplitError):
    """A check that needs a user-asserted hypothesis flag was run without it."""


class NonPrimeCharacteristic(FsplitError):
    """The requested characteristic is not a prime number."""


class DuplicateVariable(FsplitError):
    """Variable or transcendental names collide."""


class ReservedVariable(FsplitError):
    """A reserved internal variable name appeared in user input."""


class InternalInconsistency(FsplitError):
    """Two routes that must agree exactly disagreed; indicates a bug."""


class BudgetExceeded(FsplitError):
    """The oracle's matrix-entry budget was exceeded."""


class CostGuardExceeded(FsplitError):
    """The q^n standard-monomial budget was exceeded.

    ``partial`` carries any results completed before the guard fired.
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(FsplitError):
    """Ring-spec text could not be parsed; carries line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
        self.line = line
        self.column = column
