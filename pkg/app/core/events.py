"""
Run lifecycle events (lifespan context manager).

Handles startup and shutdown around a single CLI command.
"""

from contextlib import contextmanager
from typing import Iterator

from app.core.logging import get_logger
from app.core.startup import shutdown, startup

logger = get_logger(__name__)


@contextmanager
def lifespan(command: str) -> Iterator[None]:
    """
    Lifespan context manager for one command invocation.

    Executes startup tasks before the command runs and
    cleanup tasks afterwards, even when the command fails.

    Args:
        command: Name of the command being run

    Yields:
        None
    """
    logger.debug(f"🚀 Starting command {command}...")
    startup()

    try:
        yield
    finally:
        shutdown()
        logger.debug(f"✅ Command {command} finished")
