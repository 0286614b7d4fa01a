"""Semiring, finite-algebra and groupoid exceptions."""

from typing import Optional

from .base import DomainException


class UnsupportedSemiringError(DomainException):
    """Raised when a semiring name is not one of the built-in descriptors."""

    def __init__(self, name: str):
        """Initialize the exception.

        Args:
            name: The requested semiring name.
        """
        self.name = name
        super().__init__(f"unsupported semiring '{name}' (expected one of B, N, T, Z, Q)")


class BoundExceededError(DomainException):
    """Raised when an exhaustive computation would exceed a configured bound."""

    def __init__(self, what: str, value: int, bound: int, hint: Optional[str] = None):
        """Initialize the exception.

        Args:
            what: Name of the bounded quantity.
            value: The requested size.
            bound: The configured bound.
            hint: Optional advice appended to the message.
        """
        self.what = what
        self.value = value
        self.bound = bound
        message = f"{what} {value} exceeds the configured bound {bound}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)


class AxiomViolationError(DomainException):
    """Raised when a structure fails one of its defining axioms."""

    def __init__(self, axiom: str, detail: str = ""):
        """Initialize the exception.

        Args:
            axiom: Name of the failed axiom.
            detail: The offending elements, if known.
        """
        self.axiom = axiom
        self.detail = detail
        suffix = f" at {detail}" if detail else ""
        super().__init__(f"axiom '{axiom}' fails{suffix}")


class ZeroHemiringError(DomainException):
    """Raised when congruence-simpleness is asked of the zero hemiring."""

    def __init__(self):
        """Initialize the exception."""
        super().__init__("simpleness undefined for zero hemiring")


class InvalidHomomorphismError(DomainException):
    """Raised when a map between finite algebras is not a hemiring homomorphism."""

    def __init__(self, reason: str):
        """Initialize the exception.

        Args:
            reason: Which preservation law fails and where.
        """
        self.reason = reason
        super().__init__(f"not a hemiring homomorphism: {reason}")


class IndexOutOfRangeError(DomainException):
    """Raised when a carrier index lies outside the algebra."""

    def __init__(self, index: int, size: int):
        """Initialize the exception.

        Args:
            index: The offending index.
            size: Carrier size of the algebra.
        """
        self.index = index
        self.size = size
        super().__init__(f"carrier index {index} out of range for size {size}")


class PreconditionError(DomainException):
    """Raised when an operation is called outside its precondition."""

    pass


class TableFormatError(DomainException):
    """Raised when an algebra or groupoid table file cannot be read."""

    def __init__(self, line_number: int, message: str):
        """Initialize the exception.

        Args:
            line_number: 1-based line of the problem.
            message: Description of the problem.
        """
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")
