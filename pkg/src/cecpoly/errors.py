"""Exception types shared across the package."""


class CecError(Exception):
    """Base class for errors raised by cecpoly."""


class InvalidParameter(CecError, ValueError):
    """Family parameters have the wrong arity or are out of range."""


class EdgeListParseError(CecError, ValueError):
    """Malformed edge-list text.  ``line`` is 1-based, or None for whole-file errors."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BudgetExceeded(CecError):
    """The oracle was asked to enumerate more edges than its budget allows."""


class ResourceLimit(CecError):
    """The deletion-contraction engine hit its memo or step budget."""
