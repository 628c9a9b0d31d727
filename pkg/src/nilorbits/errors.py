"""Exception types shared across the package."""


class NilOrbitError(ValueError):
    """Base class for every input or precondition error raised here."""


class InvalidInput(NilOrbitError):
    pass


class NotSelfAdjoint(NilOrbitError):
    pass


class PreconditionViolated(NilOrbitError):
    pass


class IndexOutOfRange(NilOrbitError, IndexError):
    pass


class InvalidForm(NilOrbitError):
    pass


class ParseError(NilOrbitError):
    pass


class NotInParamSet(NilOrbitError):
    pass


class BadFiberIndex(NilOrbitError):
    pass


class NoFormForThisAlgebra(NilOrbitError):
    pass


class ShapeMismatch(NilOrbitError):
    pass
