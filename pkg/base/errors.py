"""Error hierarchy shared by the algebra kernel and the command line."""
from typing import Any, Dict, Optional


class KernelError(Exception):
    """Base error for every failure raised by the kernel."""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        """Initialize kernel error.

        Args:
            message: Error message
            detail: Optional structured context (inputs, flags, positions)
        """
        self.message = message
        self.detail = detail or {}
        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "error": type(self).__name__,
            "message": self.message,
            "detail": self.detail,
        }


class AlgebraError(KernelError):
    """Malformed algebra data: bad structure table, degree mismatch, foreign words."""


class HomogeneityError(KernelError):
    """An argument that must be homogeneous is not."""

    def __init__(self, message: str, argument: Optional[int] = None):
        self.argument = argument
        super().__init__(message, {"argument": argument} if argument is not None else None)


class ConsistencyError(KernelError):
    """An internal invariant was violated (for example op^2 != 0 in a complex)."""


class PreconditionError(KernelError):
    """A checker refused to run because its hypotheses do not hold."""

    def __init__(self, message: str, flag: Optional[str] = None):
        self.flag = flag
        super().__init__(message, {"flag": flag} if flag else None)


class ConfigError(KernelError):
    """Malformed suite file or expression."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        detail = {}
        if line is not None:
            detail["line"] = line
        if column is not None:
            detail["column"] = column
        super().__init__(message, detail)

    def __str__(self) -> str:
        if self.line is not None and self.column is not None:
            return f"{self.message} (line {self.line}, column {self.column})"
        if self.column is not None:
            return f"{self.message} (column {self.column})"
        return self.message
