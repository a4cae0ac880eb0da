"""
Application startup and shutdown logic.

Startup records the effective configuration; shutdown releases
the verification worker pool if one was started.
"""

from app.core.logging import get_logger
from app.core.settings import settings

logger = get_logger(__name__)


def startup() -> None:
    """
    Execute startup tasks.

    - Log effective configuration
    """
    logger.debug(
        "Configuration loaded",
        extra={
            "extra_fields": {
                "output_format": settings.output_format,
                "default_zeta": settings.default_zeta,
                "verma_window": settings.verma_window,
                "workers": settings.workers,
            }
        },
    )


def shutdown() -> None:
    """
    Execute shutdown tasks.

    - Stop the verification worker pool
    """
    try:
        from app.features.verify.scheduler import scheduler

        if scheduler.is_running:
            scheduler.stop()
            logger.info("✅ Verification scheduler stopped")
    except Exception as e:
        logger.error(f"❌ Failed to stop verification scheduler: {e}")
