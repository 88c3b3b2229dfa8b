"""Exception types shared across the package."""


class ArboeqError(Exception):
    pass


class ParseError(ArboeqError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ArboeqError, ValueError):
    pass


class IncompleteColoring(ArboeqError, ValueError):
    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__(f"coloring is not total; uncolored vertices: {self.missing}")


class FillError(ArboeqError):
    def __init__(self, position, degree):
        self.position = position
        self.degree = degree
        super().__init__(f"no vertex of degree <= {degree} available for position {position}")


class ExtensionInfeasible(ArboeqError):
    """Raised when the ordered extension finds no admissible color."""

    def __init__(self, vertex, position):
        self.vertex = vertex
        self.position = position
        super().__init__(f"extension infeasible at position {position} (vertex {vertex})")


class IrreducibleGraph(ArboeqError):
    pass


class UnsupportedClass(ArboeqError):
    pass


class InvalidEmbedding(ArboeqError, ValueError):
    pass


class BudgetExceeded(ArboeqError):
    pass
