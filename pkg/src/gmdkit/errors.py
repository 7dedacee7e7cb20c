"""Shared exception types."""


class ParseError(ValueError):
    """Malformed input text (polynomials, JSON documents, matrices).

    ``position`` is an offset into the parsed text when known, otherwise a
    (line, column) pair from a document parser.
    """

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        super().__init__(self.describe())

    def describe(self):
        if self.position is None:
            return self.message
        if isinstance(self.position, tuple):
            line, col = self.position
            return f"{self.message} (line {line}, column {col})"
        return f"{self.message} (position {self.position})"


class HypothesisError(RuntimeError):
    """An operation was invoked outside its mathematical hypotheses."""
