"""Exception hierarchy shared by every module of the package."""


class ChungFellerError(Exception):
    """Base class for all errors raised by this package."""


class PathError(ChungFellerError, ValueError):
    """A raw step sequence does not describe an (n,m)-lattice path."""


class EmptyPath(PathError):
    pass


class EmptyOrderViolation(PathError):
    """Single-step sequences (n = 0) are not admitted."""


class SumXViolation(PathError):
    pass


class SumYViolation(PathError):
    pass


class BoundYViolation(PathError):
    pass


class RootOffsetViolation(PathError):
    pass


class ParseError(ChungFellerError, ValueError):
    pass


class IndexOutOfRange(ChungFellerError, IndexError):
    pass


class PreconditionError(ChungFellerError, ValueError):
    """A map was applied outside the domain on which it is a bijection."""


class PreconditionNPL(PreconditionError):
    pass


class PreconditionRML(PreconditionError):
    pass


class PreconditionZeroTilde(PreconditionError):
    pass


class InvalidRange(ChungFellerError, ValueError):
    pass


class NonDivisible(ChungFellerError, ArithmeticError):
    pass


class CapExceeded(ChungFellerError):
    """Requested enumeration is larger than the configured cap."""
