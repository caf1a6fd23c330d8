"""
Exception hierarchy for drinfeld_open.

Every error raised on purpose by the package derives from DrinfeldOpenError,
so callers (the CLI in particular) can separate mathematical failures from
programming errors.
"""
from typing import Optional


class DrinfeldOpenError(Exception):
    """Base class for all package errors."""


class NotPrimePowerError(DrinfeldOpenError, ValueError):
    """Field order is not a prime power."""


class ZeroPolynomialError(DrinfeldOpenError, ValueError):
    """Operation undefined on the zero polynomial."""


class RingMismatchError(DrinfeldOpenError, TypeError):
    """Operands belong to different rings."""


class NotInvertibleError(DrinfeldOpenError, ArithmeticError):
    """Element or matrix is not a unit."""


class DependencyError(DrinfeldOpenError):
    """Input vectors are linearly dependent where independence is required."""


class CharacteristicPrimeError(DrinfeldOpenError):
    """Torsion requested at the characteristic prime of the module."""


class ExtensionCapError(DrinfeldOpenError):
    """Extension search exceeded the configured degree cap."""


class InvariantViolation(DrinfeldOpenError, AssertionError):
    """A mathematical invariant failed; signals a bug or corrupt input."""


class ClosureIncompleteError(DrinfeldOpenError):
    """Operation needs a complete group closure but the cap was hit."""


class ConfigError(DrinfeldOpenError, ValueError):
    """Invalid run configuration."""


class ModuleFileError(DrinfeldOpenError, ValueError):
    """Malformed module definition file."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)
