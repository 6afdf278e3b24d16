"""Exception hierarchy.

Only malformed inputs raise; infinite divergences are returned as ``math.inf``.
"""


class SymdivError(ValueError):
    """Base class for every error raised by this package."""


class EmptyDistribution(SymdivError):
    pass


class NegativeMass(SymdivError):
    pass


class NotNormalized(SymdivError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"probabilities sum to {total!r}, not 1")


class SupportMismatch(SymdivError):
    pass


class LambdaOutOfRange(SymdivError):
    pass


class EpsilonOutOfRange(SymdivError):
    pass


class ParameterOutOfRange(SymdivError):
    pass


class NotSymmetric(SymdivError):
    pass


class NotConvex(SymdivError):
    pass


class KraftViolation(SymdivError):
    def __init__(self, kraft_sum):
        self.kraft_sum = kraft_sum
        super().__init__(f"Kraft sum {kraft_sum!r} exceeds 1")


class ZeroMassSymbol(SymdivError):
    pass


class UnknownMeasure(SymdivError):
    pass


class ParseError(SymdivError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
