"""Exceptions raised while building and comparing algebra elements."""

from .base import DomainException


class ExpressionSyntaxError(DomainException):
    """Raised when an element or polynomial expression cannot be parsed."""

    def __init__(self, column: int, message: str):
        """Initialize the exception.

        Args:
            column: 1-based column of the offending token.
            message: Description of the problem.
        """
        self.column = column
        super().__init__(f"syntax error at column {column}: {message}")


class UnknownIdentifierError(DomainException):
    """Raised when an expression names something the graph does not have."""

    def __init__(self, identifier: str):
        """Initialize the exception.

        Args:
            identifier: The unknown identifier.
        """
        self.identifier = identifier
        super().__init__(f"unknown identifier '{identifier}'")


class RangeMismatchError(DomainException):
    """Raised when two paths must end at the same vertex but do not."""

    def __init__(self, left: str, right: str):
        """Initialize the exception.

        Args:
            left: Printed form of the first path.
            right: Printed form of the second path.
        """
        super().__init__(f"range mismatch: r({left}) != r({right})")


class MixedGraphError(DomainException):
    """Raised when elements over different graphs are combined."""

    def __init__(self):
        """Initialize the exception."""
        super().__init__("elements live over different graphs")


class OutOfScopeError(DomainException):
    """Raised for queries the toolkit deliberately does not decide."""

    pass


class NotAHomomorphismError(DomainException):
    """Raised when generator images violate a defining relation."""

    def __init__(self, relation: str, detail: str):
        """Initialize the exception.

        Args:
            relation: Label of the violated relation.
            detail: The generators involved.
        """
        self.relation = relation
        super().__init__(f"not a homomorphism: relation {relation} fails for {detail}")


class ConditionLRequiredError(DomainException):
    """Raised when the Cuntz-Krieger checker meets a cycle without exit."""

    def __init__(self):
        """Initialize the exception."""
        super().__init__(
            "graph has a cycle without an exit; use the graded uniqueness check instead"
        )
