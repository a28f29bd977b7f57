"""
Exceptions - Error types raised by the exact geometry toolkit
"""


class GeometryError(ValueError):
    """Raised when an input lies outside an operation's domain"""


class ModelMismatchError(GeometryError):
    """Raised when points or isometries of different Hermitian models are mixed"""

    def __init__(self, expected, found):
        self.expected = expected
        self.found = found
        super().__init__(f"model mismatch: expected {expected}, found {found}")


class LiteralSyntaxError(ValueError):
    """Raised when a textual literal cannot be parsed"""

    def __init__(self, message: str, text: str, column: int = 0):
        self.message = message
        self.text = text
        self.column = column
        super().__init__(f"{message} at column {column + 1} in {text!r}")
