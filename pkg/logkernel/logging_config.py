"""
Structured Logging Configuration for logkernel

JSON (python-json-logger) or coloured text logs with component tags, written
to stderr so that report output on stdout stays machine readable.

Usage:
    from logkernel.logging_config import setup_logging, get_logger

    setup_logging()
    logger = get_logger("quad")
    logger.warning("Not converged", extra={"component": "quad", "event": "not_converged"})
"""

import json
import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from pythonjsonlogger.json import JsonFormatter

from logkernel.config import get_settings


ROOT_LOGGER = "logkernel"

# Extra fields that are copied into JSON records when present
OPTIONAL_FIELDS = (
    "component",
    "event",
    "identity_id",
    "params",
    "data",
    "duration_ms",
    "status",
    "error",
)


class StructuredJSONFormatter(JsonFormatter):
    """
    JSON formatter with a fixed envelope.

    Output format:
    {
        "timestamp": "2026-01-14T10:23:45.123+00:00",
        "level": "WARNING",
        "logger": "logkernel.series",
        "message": "...",
        "component": "series:tail_corrected",
        "event": "model_mismatch",
        "data": {...}
    }
    """

    def add_fields(self, log_record: dict, record: logging.LogRecord, message_dict: dict) -> None:
        super().add_fields(log_record, record, message_dict)
        log_record["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="milliseconds")
        log_record["level"] = record.levelname
        log_record["logger"] = record.name
        # Drop empty extras
        for field in OPTIONAL_FIELDS:
            if field in log_record and log_record[field] is None:
                del log_record[field]


class TextFormatter(logging.Formatter):
    """
    Human-readable text formatter for terminals.
    """

    COLORS = {
        "DEBUG": "\033[36m",     # Cyan
        "INFO": "\033[32m",      # Green
        "WARNING": "\033[33m",   # Yellow
        "ERROR": "\033[31m",     # Red
        "CRITICAL": "\033[35m",  # Magenta
        "RESET": "\033[0m",
    }

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as text."""
        color = self.COLORS.get(record.levelname, "")
        reset = self.COLORS["RESET"]
        timestamp = datetime.now(timezone.utc).strftime("%H:%M:%S.%f")[:-3]
        component = getattr(record, "component", record.name)

        parts = [
            f"{color}[{timestamp}]",
            f"[{record.levelname:>8}]",
            f"[{component}]{reset}",
            record.getMessage(),
        ]

        if hasattr(record, "identity_id"):
            parts.insert(3, f"({record.identity_id})")

        if hasattr(record, "duration_ms"):
            parts.append(f"[{record.duration_ms}ms]")

        if getattr(record, "data", None):
            data_summary = json.dumps(record.data, default=str)
            if len(data_summary) > 100:
                data_summary = data_summary[:100] + "..."
            parts.append(f"\n  Data: {data_summary}")

        return " ".join(parts)


class ContextAdapter(logging.LoggerAdapter):
    """
    Logger adapter that adds context (identity_id, params) to all logs.

    Usage:
        logger = ContextAdapter(base_logger, {"identity_id": "main-13"})
        logger.info("Message")
    """

    def process(self, msg: str, kwargs: dict) -> tuple[str, dict]:
        """Add context to log record."""
        extra = kwargs.get("extra", {})
        extra.update(self.extra)
        kwargs["extra"] = extra
        return msg, kwargs


def setup_logging(level: Optional[str] = None) -> None:
    """
    Configure the ``logkernel`` logger hierarchy.

    Should be called once at program startup (the CLI does this).

    Args:
        level: Optional override for settings.log_level
    """
    settings = get_settings()
    log_level = getattr(logging, level or settings.log_level)

    root_logger = logging.getLogger(ROOT_LOGGER)
    root_logger.setLevel(log_level)
    root_logger.handlers.clear()
    root_logger.propagate = False

    if settings.log_format == "json":
        formatter: logging.Formatter = StructuredJSONFormatter()
    else:
        formatter = TextFormatter()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(log_level)
    root_logger.addHandler(console_handler)

    if settings.log_to_file:
        Path(settings.log_file_path).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(settings.log_file_path, mode="a", encoding="utf-8")
        # File logs are always JSON
        file_handler.setFormatter(StructuredJSONFormatter())
        file_handler.setLevel(logging.DEBUG)
        root_logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger for a specific component.

    Args:
        name: Component name (e.g., "quad", "series", "verify")

    Returns:
        Logger under the ``logkernel`` hierarchy
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def create_identity_logger(
    base_logger: logging.Logger,
    identity_id: str,
    params: Optional[dict] = None,
) -> ContextAdapter:
    """
    Create a logger adapter bound to one identity check.

    Args:
        base_logger: Base logger instance
        identity_id: Registry id being verified
        params: Parameter point

    Returns:
        Logger adapter with context
    """
    return ContextAdapter(base_logger, {"identity_id": identity_id, "params": params or {}})


def log_quad_event(
    logger: logging.Logger,
    event: str,
    data: Optional[dict] = None,
    level: int = logging.DEBUG,
) -> None:
    """
    Log a quadrature event with consistent formatting.

    Args:
        logger: Logger instance
        event: Event type (e.g., "not_converged", "tail_truncated")
        data: Optional event data (value, error_estimate, subdivisions...)
        level: Log level
    """
    extra: dict[str, Any] = {"component": "quad", "event": event}
    if data:
        extra["data"] = data
    logger.log(level, f"Quadrature {event}", extra=extra)


def log_series_event(
    logger: logging.Logger,
    mode: str,
    term_id: str,
    event: str,
    data: Optional[dict] = None,
    level: int = logging.DEBUG,
) -> None:
    """
    Log a summation engine event.

    Args:
        logger: Logger instance
        mode: Summation mode that produced the event
        term_id: Term generator id
        event: Event type (e.g., "model_mismatch", "fallback_direct")
        data: Optional event data
        level: Log level
    """
    if level < logging.WARNING and not get_settings().log_series_diagnostics:
        return

    extra: dict[str, Any] = {"component": f"series:{mode}", "event": event}
    if data:
        extra["data"] = {"term_id": term_id, **data}
    else:
        extra["data"] = {"term_id": term_id}
    logger.log(level, f"Series {term_id} {event}", extra=extra)


def log_verify_event(
    logger: logging.Logger,
    identity_id: str,
    status: str,
    params: Optional[dict] = None,
    error: Optional[str] = None,
    duration_ms: Optional[int] = None,
) -> None:
    """
    Log the outcome of one identity check.

    Args:
        logger: Logger instance
        identity_id: Registry id
        status: Verdict or "error"
        params: Parameter point
        error: Optional error message
        duration_ms: Optional duration in milliseconds
    """
    extra: dict[str, Any] = {
        "component": "verify",
        "event": "identity_checked",
        "identity_id": identity_id,
        "status": status,
    }
    if params:
        extra["params"] = params
    if error:
        extra["error"] = error
    if duration_ms is not None:
        extra["duration_ms"] = duration_ms

    level = logging.WARNING if status in ("fail", "error") else logging.INFO
    logger.log(level, f"Identity {identity_id} {status}", extra=extra)
