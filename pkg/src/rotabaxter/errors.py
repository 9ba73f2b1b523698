"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by rotabaxter."""


class DimensionMismatch(AlgebraError, ValueError):
    pass


class SingularMatrix(AlgebraError, ValueError):
    pass


class NonRationalSpectrum(AlgebraError):
    """The characteristic polynomial has roots outside Q."""

    def __init__(self, message, char_poly=None, found=()):
        super().__init__(message)
        self.char_poly = char_poly
        self.found = tuple(found)


class InvalidLieAlgebra(AlgebraError, ValueError):
    def __init__(self, report):
        super().__init__(f"structure constants do not define a Lie algebra: {report}")
        self.report = report


class NotAnIdeal(AlgebraError, ValueError):
    pass


class NotInvariant(AlgebraError, ValueError):
    """An operator does not map a subspace into itself."""


class NonSymmetricForm(AlgebraError, ValueError):
    pass


class DegenerateForm(AlgebraError, ValueError):
    pass


class NotInvariantForm(AlgebraError, ValueError):
    pass


class StructureError(AlgebraError):
    """Errors raised by the theorem pipelines; may carry a partial report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class HypothesisViolated(StructureError):
    pass


class NotRotaBaxter(StructureError):
    pass


class NotBothRotaBaxter(StructureError):
    pass


class ZeroWeight(StructureError):
    pass


class NotSimple(StructureError):
    pass


class MixedZeroNonzeroWeights(StructureError):
    pass


class ZeroTargetWeight(StructureError):
    pass


class TheoremContradiction(StructureError, RuntimeError):
    """Hypotheses of a theorem hold but its conclusion was not reproduced.

    This always indicates a bug (or bad arithmetic) and is never an
    acceptable outcome for well-formed input.
    """


class UnknownEntry(AlgebraError, KeyError):
    pass


class DocumentError(AlgebraError, ValueError):
    pass
