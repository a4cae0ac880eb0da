import time
import uuid
from typing import Callable

from app.core.logging import clear_run_context, get_logger, set_run_context

logger = get_logger(__name__)


class CommandLoggingMiddleware:
    """
    Wrapper for structured command logging.

    Logs every CLI command with mandatory fields:
    - timestamp
    - level
    - service
    - layer (always "middleware")
    - run_id
    - command
    - exit_code
    - duration_ms

    Log Levels:
    - INFO: Successful commands (exit 0)
    - WARNING: Slow commands (>10s) or verification failures (exit 1)
    - ERROR: Usage or computation errors (exit 2, 3)
    """

    def dispatch(self, command: str, call_next: Callable[[], int]) -> int:
        """Run the command and log it with structured format."""
        run_id = str(uuid.uuid4())[:8]

        set_run_context(run_id, {"layer": "middleware", "command": command})
        logger.debug(f"Command started: {command}")

        start_time = time.time()
        try:
            exit_code = call_next()
        finally:
            duration_ms = int((time.time() - start_time) * 1000)

        log_level = self._get_log_level(exit_code, duration_ms)
        log_message = f"{command} - exit {exit_code} ({duration_ms}ms)"
        log_data = {
            "exit_code": exit_code,
            "duration_ms": duration_ms,
        }

        if log_level == "INFO":
            logger.info(log_message, extra={"extra_fields": log_data})
        elif log_level == "WARNING":
            logger.warning(log_message, extra={"extra_fields": log_data})
        elif log_level == "ERROR":
            logger.error(log_message, extra={"extra_fields": log_data})

        clear_run_context()

        return exit_code

    def _get_log_level(self, exit_code: int, duration_ms: int) -> str:
        """
        Determine log level based on exit code and duration.

        Rules:
        - INFO: Successful commands (0)
        - WARNING: Verification failures (1) or slow commands (>10000ms)
        - ERROR: Usage or computation errors (2, 3)
        """
        if exit_code >= 2:
            return "ERROR"

        if exit_code == 1:
            return "WARNING"

        if duration_ms > 10000:
            return "WARNING"

        return "INFO"
