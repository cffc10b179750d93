class UsageError(ValueError):
    """Raised when an operation is called outside its precondition."""


class CapacityError(RuntimeError):
    """Raised when an enumeration would exceed the configured guard."""


class FormatError(ValueError):
    """Malformed instance, witness or graph text.

    ``line`` is 1-based, or None when the problem is not tied to a line.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
