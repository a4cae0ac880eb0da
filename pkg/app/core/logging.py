import json
import logging
import sys
from contextvars import ContextVar
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, Optional

from app.core.settings import settings

# Run tracking: one run id per CLI command, plus the fields bound to it
run_id_ctx: ContextVar[Optional[str]] = ContextVar("run_id", default=None)
run_context_ctx: ContextVar[Dict] = ContextVar("run_context", default={})


def _render_value(value: Any) -> Any:
    """
    Make exact values readable in log lines.

    Fractions print as p/q, rational functions and flags through their own
    render(); everything else falls back to str.
    """
    if isinstance(value, Fraction):
        return str(value)
    render = getattr(value, "render", None)
    if callable(render):
        return render()
    return str(value)


class StructuredFormatter(logging.Formatter):
    """
    JSON structured logging formatter.

    One JSON object per line with timestamp, level, service, logger and
    message, the bound run fields (run_id, command, zeta, ...), and the
    worker process name when the record comes from the verification pool.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="milliseconds"),
            "level": record.levelname,
            "service": settings.app_name,
            "logger": record.name,
            "message": record.getMessage(),
        }

        run_id = run_id_ctx.get()
        if run_id:
            log_data["run_id"] = run_id
        log_data.update(run_context_ctx.get())

        if record.processName != "MainProcess":
            log_data["worker"] = record.processName

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        if hasattr(record, "extra_fields"):
            log_data.update(record.extra_fields)

        return json.dumps(log_data, default=_render_value)


class PlainFormatter(logging.Formatter):
    """Plain text for DEBUG runs: time, level, logger, run id, bound command."""

    def format(self, record: logging.LogRecord) -> str:
        timestamp = datetime.now(timezone.utc).strftime("%H:%M:%S.%f")[:-3]
        run_id = run_id_ctx.get()
        command = run_context_ctx.get().get("command")
        tag = f"[{run_id}:{command}]" if run_id else ""
        line = f"{timestamp} {record.levelname:<7} {record.name}{tag} {record.getMessage()}"
        if record.exc_info:
            line += "\n" + self.formatException(record.exc_info)
        return line


def setup_logging():
    """
    Configure logging on stderr.

    JSON lines normally, plain text at DEBUG level in debug mode. stdout is
    reserved for command output.
    """
    formatter = PlainFormatter() if settings.debug else StructuredFormatter()

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    logging.basicConfig(
        level=logging.DEBUG if settings.debug else logging.INFO,
        handlers=[handler],
        force=True,
    )

    # sympy's cache and plotting backends are chatty at DEBUG
    logging.getLogger("sympy").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def set_run_context(run_id: str, context: Dict[str, Any] = None):
    """
    Start the logging context of a run.

    Args:
        run_id: Unique run identifier
        context: Initial fields (layer, command)
    """
    run_id_ctx.set(run_id)
    run_context_ctx.set(dict(context or {}))


def bind_run_fields(**fields: Any):
    """Add fields (zeta, suite, ...) to every record of the current run."""
    context = dict(run_context_ctx.get())
    context.update({key: _render_value(value) for key, value in fields.items() if value is not None})
    run_context_ctx.set(context)


def clear_run_context():
    """Clear run context after command completion."""
    run_id_ctx.set(None)
    run_context_ctx.set({})
