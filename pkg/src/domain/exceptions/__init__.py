"""Domain-specific exceptions."""

from .algebra_exceptions import (
    AxiomViolationError,
    BoundExceededError,
    IndexOutOfRangeError,
    InvalidHomomorphismError,
    PreconditionError,
    TableFormatError,
    UnsupportedSemiringError,
    ZeroHemiringError,
)
from .base import DomainException
from .element_exceptions import (
    ConditionLRequiredError,
    ExpressionSyntaxError,
    MixedGraphError,
    NotAHomomorphismError,
    OutOfScopeError,
    RangeMismatchError,
    UnknownIdentifierError,
)
from .graph_exceptions import (
    GraphSemanticError,
    GraphShapeError,
    GraphSyntaxError,
    UnknownVertexError,
)

__all__ = [
    "DomainException",
    "AxiomViolationError",
    "BoundExceededError",
    "IndexOutOfRangeError",
    "InvalidHomomorphismError",
    "PreconditionError",
    "TableFormatError",
    "UnsupportedSemiringError",
    "ZeroHemiringError",
    "ConditionLRequiredError",
    "ExpressionSyntaxError",
    "MixedGraphError",
    "NotAHomomorphismError",
    "OutOfScopeError",
    "RangeMismatchError",
    "UnknownIdentifierError",
    "GraphSemanticError",
    "GraphShapeError",
    "GraphSyntaxError",
    "UnknownVertexError",
]
