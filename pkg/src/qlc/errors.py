"""Exception types shared across the package."""


class QlcError(Exception):
    """Base class for every error raised by this package."""


class InternalZerosError(QlcError, ValueError):
    """A property check received a sequence with an internal zero."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"sequence has an internal zero at index {index}")


class NegativeCoefficientError(QlcError, ValueError):
    def __init__(self, message: str, *, n=None, k=None, expr=None, degree=None):
        self.n = n
        self.k = k
        self.expr = expr
        self.degree = degree
        super().__init__(message)


class LengthError(QlcError, ValueError):
    """Input sequence too short for the requested transform."""


class ExprSyntaxError(QlcError, ValueError):
    def __init__(self, source: str, offset: int, expected: set[str]):
        self.source = source
        self.offset = offset
        self.expected = frozenset(expected)
        want = ", ".join(sorted(self.expected))
        super().__init__(f"syntax error at byte {offset} of {source!r}: expected one of {want}")


class NotConstantError(QlcError, ValueError):
    """An expression that must be free of n and k mentions one of them."""


class UnknownFamilyError(QlcError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown family"
