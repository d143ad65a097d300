"""Exception hierarchy shared by all gainforge modules."""


class GainForgeError(Exception):
    """Base class for every error raised by this package."""


# -- graph construction -------------------------------------------------

class DuplicateEdge(GainForgeError):
    pass


class SelfLoop(GainForgeError):
    pass


class IndexOutOfRange(GainForgeError):
    pass


class NonUnitGain(GainForgeError):
    pass


class LengthMismatch(GainForgeError):
    pass


class NotACycle(GainForgeError):
    pass


class SupportMismatch(GainForgeError):
    pass


class Disconnected(GainForgeError):
    pass


class OrderMismatch(GainForgeError):
    pass


class Timeout(GainForgeError):
    """A budgeted search ran out of budget.  Not a proof of nonexistence."""


# -- spectral ------------------------------------------------------------

class EmptyGraph(GainForgeError):
    pass


class NoConvergence(GainForgeError):
    pass


class InvalidParameters(GainForgeError):
    pass


class TooLarge(GainForgeError):
    pass


# -- constructions -------------------------------------------------------

class NotAWeighingMatrix(GainForgeError):
    pass


class UnknownName(GainForgeError):
    pass


class NotSquareRootOfkI(GainForgeError):
    pass


class InvalidOrder(GainForgeError):
    pass


class NotGaussianPrime(GainForgeError):
    pass


# -- line systems ----------------------------------------------------------

class NotTwoEigenvalue(GainForgeError):
    pass


class NonNegativeThetaMin(GainForgeError):
    pass


class AngleViolation(GainForgeError):
    pass


class BadParam(GainForgeError):
    pass


class PartitionInvalid(GainForgeError):
    pass


class PartNotTight(GainForgeError):
    """Raised by dismantle when one block of the partition is not tight.

    args[0] is the index of the offending part.
    """


class NormViolation(GainForgeError):
    pass


# -- file formats ----------------------------------------------------------

class ParseError(GainForgeError):
    """Malformed input file.  Carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
