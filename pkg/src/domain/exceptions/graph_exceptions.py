"""Graph-related domain exceptions."""

from .base import DomainException


class GraphSyntaxError(DomainException):
    """Raised when a graph file line cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        """Initialize the exception.

        Args:
            line_number: 1-based line number of the offending line.
            message: Description of the problem.
        """
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class GraphSemanticError(DomainException):
    """Raised when a graph declaration is well-formed but inconsistent."""

    def __init__(self, identifier: str, message: str):
        """Initialize the exception.

        Args:
            identifier: The offending vertex, edge or bundle id.
            message: Description of the problem.
        """
        self.identifier = identifier
        super().__init__(message)


class UnknownVertexError(DomainException):
    """Raised when a vertex is not part of the graph."""

    def __init__(self, vertex: str):
        """Initialize the exception.

        Args:
            vertex: The unknown vertex id.
        """
        self.vertex = vertex
        super().__init__(f"unknown vertex '{vertex}'")


class GraphShapeError(DomainException):
    """Raised when a graph does not have the shape an operation requires."""

    pass
