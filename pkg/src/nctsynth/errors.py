"""Exception hierarchy.

Errors split into two families so that callers (the CLI in particular) can
map them onto exit codes: malformed input files raise ``FormatError``
subclasses, violated preconditions raise ``PreconditionError`` subclasses.
"""


class NctError(Exception):
    """Base class of every error raised by this package."""


class FormatError(NctError, ValueError):
    """Malformed permutation or circuit data."""


class PreconditionError(NctError, ValueError):
    """An operation was called outside its domain."""


# -- function data ---------------------------------------------------------

class NotAPermutation(FormatError):
    pass


class NotPowerOfTwo(FormatError):
    pass


# -- circuit format --------------------------------------------------------

class CircuitSyntaxError(FormatError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class WireOutOfRange(FormatError):
    pass


class DuplicateInput(FormatError):
    pass


class BadOutputMap(FormatError):
    pass


# -- preconditions ---------------------------------------------------------

class IndexOutOfRange(PreconditionError, IndexError):
    pass


class ArityTooLarge(PreconditionError):
    pass


class ArityTooSmall(PreconditionError):
    pass


class AssignmentLengthMismatch(PreconditionError):
    pass


class NoDesignatedOutputs(PreconditionError):
    pass


class ContainsMct(PreconditionError):
    pass


class AllocatorExhausted(PreconditionError):
    pass


class SplitOutOfRange(PreconditionError):
    pass


class NoFreeWire(PreconditionError):
    pass


class InvalidCut(PreconditionError):
    pass


class MalformedDag(PreconditionError):
    pass


class TooLargeForExact(PreconditionError):
    pass


class DegenerateBase(PreconditionError):
    pass
