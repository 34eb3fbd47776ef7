"""Exception hierarchy.

Every failure raised by the library derives from :class:`CovercertError` so the
CLI can separate library-detected check failures from crashes.
"""

from __future__ import annotations


class CovercertError(Exception):
    """Base class for all library errors."""


class InputError(CovercertError, ValueError):
    """Malformed input: bad JSON, bad expression, inconsistent degrees."""


# exact core
class ZeroInverse(CovercertError, ZeroDivisionError):
    pass


class ReducibleField(CovercertError):
    """The minimal polynomial of a number field turned out to be reducible."""

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class PrecisionExhausted(CovercertError):
    pass


# heights
class DegenerateSubstitution(CovercertError):
    pass


class ZeroDeterminant(CovercertError):
    pass


class TooFewEquations(CovercertError):
    pass


class PositiveDimensional(CovercertError):
    pass


# series
class IndeterminateOrder(CovercertError):
    pass


class HypothesisFailed(CovercertError):
    pass


class InsufficientPrecision(CovercertError):
    pass


class PrefixCoincidence(CovercertError):
    pass


class RootsOutsideField(CovercertError):
    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class RamifiedAtInfinity(CovercertError):
    pass


class WrongPoleShape(CovercertError):
    pass


# cover analysis
class WrongPoleOrder(CovercertError):
    pass


class UnclassifiedDiscriminantRoot(CovercertError):
    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class RamifiedAtDeclaredBeta(CovercertError):
    def __init__(self, message: str, beta=None):
        super().__init__(message)
        self.beta = beta


class DeclaredPointNotRoot(CovercertError):
    pass


class NotSquarefreeAfterReduction(CovercertError):
    """The eliminant is a proper power; ``model`` holds the extracted root polynomial."""

    def __init__(self, message: str, model=None, power: int = 1):
        super().__init__(message)
        self.model = model
        self.power = power


class NoAdmissibleShift(CovercertError):
    pass


# vset
class DimensionMismatch(CovercertError):
    pass
