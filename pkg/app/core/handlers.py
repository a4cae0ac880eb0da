"""
Global exception handlers.

Each handler turns an exception into (exit code, error payload). The payload
goes to stderr; the log record carries the exception class and exit code as
structured fields.
"""

from pydantic import ValidationError

from app.core.exceptions import AppException
from app.core.logging import get_logger
from app.core.settings import settings
from app.utils.response import error

logger = get_logger(__name__)

USAGE_EXIT = 2
COMPUTATION_EXIT = 3


def handle_app_exception(exc: AppException) -> tuple[int, dict]:
    """
    Domain errors carry their own exit code and a message naming the cause
    (the vanishing denominator, the offending bracket triple, ...).
    """
    fields = {"exit_code": exc.exit_code, "error_type": type(exc).__name__}
    if exc.exit_code == USAGE_EXIT:
        logger.warning(f"Rejected input: {exc.message}", extra={"extra_fields": fields})
    else:
        logger.error(f"{type(exc).__name__}: {exc.message}", extra={"extra_fields": fields})
    return exc.exit_code, error(message=exc.message)


def handle_validation_exception(exc: ValidationError) -> tuple[int, dict]:
    """Pydantic rejected a parameter, weight or request: usage error."""
    problems = exc.errors()
    logger.warning(
        f"Validation failed for {exc.title}: {len(problems)} problem(s)",
        extra={"extra_fields": {"exit_code": USAGE_EXIT, "errors": problems}},
    )

    messages = "; ".join(str(item.get("msg", "")) for item in problems)
    return USAGE_EXIT, error(
        message=f"Invalid input: {messages}",
        error_detail=str(problems) if settings.debug else None,
    )


def handle_unexpected_exception(exc: Exception) -> tuple[int, dict]:
    """
    Anything else is reported as a computation error.

    The traceback is logged; the payload only gets the exception text in
    debug mode.
    """
    logger.exception(
        f"Unexpected {type(exc).__name__} during computation",
        extra={"extra_fields": {"exit_code": COMPUTATION_EXIT, "error_type": type(exc).__name__}},
    )
    return COMPUTATION_EXIT, error(
        message="An unexpected error occurred during computation.",
        error_detail=str(exc) if settings.debug else None,
    )
