"""Exact q-polynomial arithmetic, combinatorial triangles and log-concavity checks."""
from .errors import (ExprSyntaxError, InternalZerosError, LengthError, NegativeCoefficientError,
                     NotConstantError, QlcError, UnknownFamilyError)
from .qpoly import ONE, Q, ZERO, QPoly, eval_at, q_geq

__version__ = "0.1.0"

__all__ = [
    "QPoly", "ZERO", "ONE", "Q", "eval_at", "q_geq",
    "QlcError", "InternalZerosError", "NegativeCoefficientError", "LengthError",
    "ExprSyntaxError", "NotConstantError", "UnknownFamilyError",
]
