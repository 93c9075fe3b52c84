"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "FpquadError",
    "DomainError",
    "ParseError",
    "UnknownIdentifier",
    "UnknownBuiltin",
    "EvalError",
    "NumericalError",
    "DivergenceError",
    "SymmetryError",
    "NoConvergence",
]


class FpquadError(Exception):
    """Base class for errors raised by this package."""


class DomainError(FpquadError, ValueError):
    """Argument outside the mathematical domain of a function."""


class ParseError(FpquadError, ValueError):
    """Malformed expression source.

    Carries the byte offset of the offending token in ``offset``.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"at byte {offset}: {message}")
        self.offset = offset


class UnknownIdentifier(ParseError):
    """Identifier outside the supported name whitelist."""

    def __init__(self, name: str, offset: int):
        ParseError.__init__(self, f"unknown identifier {name!r}", offset)
        self.name = name


class UnknownBuiltin(FpquadError, KeyError):
    """No builtin integrand registered under the requested name."""


class EvalError(FpquadError, ArithmeticError):
    """Expression evaluation failed (division by zero, overflow, domain)."""


class NumericalError(FpquadError):
    """A numerical consistency check failed."""


class DivergenceError(FpquadError):
    """Quadrature terms grow instead of decaying; the integrand violates
    the decay hypothesis on the contour."""


class SymmetryError(FpquadError):
    """Problem does not satisfy the preconditions of the symmetric
    half-sum formula."""


class NoConvergence(FpquadError):
    """Iterative refinement stalled before reaching the target accuracy.

    ``history`` holds the refinement trace when available.
    """

    def __init__(self, message: str, history=None):
        super().__init__(message)
        self.history = history if history is not None else []
