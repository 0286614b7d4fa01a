"""Mapping of exceptions to exit codes and error messages."""

import logging
import sys
from typing import Callable, Optional, TextIO

from pydantic import ValidationError

from ..domain.exceptions import DomainException, OutOfScopeError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OUT_OF_SCOPE = 2


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"])
        parts.append(f"{location}: {error['msg']}" if location else error["msg"])
    return "; ".join(parts)


def handle_error(exc: Exception, stream: Optional[TextIO] = None) -> int:
    """Report an exception on ``stream`` and return the exit code.

    Args:
        exc: The exception raised while running a verb.
        stream: Where the message goes, stderr by default.

    Returns:
        int: 2 for out-of-scope queries, 1 for every other handled error.

    Raises:
        Exception: Re-raises anything that is not a domain, validation or I/O error.
    """
    stream = stream if stream is not None else sys.stderr
    if isinstance(exc, OutOfScopeError):
        logger.info(f"out-of-scope query: {exc}")
        print(f"out of scope: {exc}", file=stream)
        return EXIT_OUT_OF_SCOPE
    if isinstance(exc, DomainException):
        print(f"error: {type(exc).__name__}: {exc}", file=stream)
        return EXIT_ERROR
    if isinstance(exc, ValidationError):
        print(f"error: invalid arguments: {_validation_message(exc)}", file=stream)
        return EXIT_ERROR
    if isinstance(exc, OSError):
        print(f"error: {exc}", file=stream)
        return EXIT_ERROR
    raise exc


def run_guarded(action: Callable[[], int], stream: Optional[TextIO] = None) -> int:
    """Run ``action`` and translate handled exceptions into exit codes."""
    try:
        return action()
    except Exception as exc:  # noqa: BLE001
        return handle_error(exc, stream)
