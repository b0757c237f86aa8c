"""Exception hierarchy shared across the package.

Every failure mode that a caller is expected to handle gets its own class;
the CLI maps these onto process exit codes (parse errors -> 2, resource
cap violations -> 3, everything else -> 1).
"""

from __future__ import annotations


class GintError(Exception):
    """Base class for all package errors."""


class CoefficientError(GintError):
    """Bad coefficient arithmetic, e.g. inverting zero in F_p."""


class ParseError(GintError):
    """Syntax error in a polynomial or script source."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None and col is not None:
            message = f"line {line}, col {col}: {message}"
        elif line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RingMismatchError(GintError):
    """Operands live over different rings or incompatible free modules."""


class NotHomogeneousError(GintError):
    """An operation that requires graded input received a non-graded one."""


class DegreeCapExceededError(GintError):
    """A Groebner run needed S-pairs beyond the configured degree cap."""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(
            f"Groebner computation reached degree {degree}, above the cap {cap}; "
            f"raise the cap explicitly to continue"
        )


class VariableCapExceededError(GintError):
    """A ring construction (usually a join) needs more variables than allowed."""


class ZeroModuleError(GintError):
    """The zero module has no depth, parameter or similar invariant."""


class NoParameterFoundError(GintError):
    """Seeded random search failed to produce a parameter element."""


class StabilizationError(GintError):
    """An iterative limit (sections functor) failed to stabilize in bounds."""
