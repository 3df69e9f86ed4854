"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands have incompatible lengths."""


class CapacityError(RuntimeError):
    """An enumeration would exceed the configured budget or limit."""

    def __init__(self, message, required=None, configured=None):
        super().__init__(message)
        self.required = required
        self.configured = configured


class ZeroCodeError(ValueError):
    """Minimum distance requested for a code with no nonzero codeword."""


class OverrideError(ValueError):
    """A user-supplied code failed parameter validation at its node."""


class CodeFileError(ValueError):
    """Malformed code file; carries 1-based line/column of the defect."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)
        self.line = line
        self.column = column
