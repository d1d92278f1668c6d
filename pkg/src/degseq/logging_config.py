"""Central logging configuration for degseq."""

from __future__ import annotations

import json
import logging
import os
import sys
import threading
import uuid
from datetime import datetime, timezone
from typing import Any

_CONFIG_LOCK = threading.Lock()
_CONFIGURED = False
_RUN_ID = os.getenv("DEGSEQ_RUN_ID") or str(uuid.uuid4())

_RESERVED_FIELDS = frozenset(
    {
        "args",
        "msg",
        "levelname",
        "levelno",
        "pathname",
        "filename",
        "module",
        "exc_info",
        "exc_text",
        "stack_info",
        "lineno",
        "funcName",
        "created",
        "msecs",
        "relativeCreated",
        "thread",
        "threadName",
        "processName",
        "process",
        "message",
        "taskName",
    }
)


def get_run_id() -> str:
    """Return the process-scoped run identifier."""

    return _RUN_ID


class _RunIdFilter(logging.Filter):
    """Inject the run identifier into every log record."""

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: D401
        if not getattr(record, "run_id", None):
            record.run_id = _RUN_ID
        return True


def _jsonable(value: Any) -> Any:
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(item) for item in value]
    return str(value)


class _JsonFormatter(logging.Formatter):
    """Formatter that outputs structured JSON payloads."""

    def format(self, record: logging.LogRecord) -> str:  # noqa: D401
        payload: dict[str, Any] = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "run_id": getattr(record, "run_id", _RUN_ID),
        }
        for key, value in record.__dict__.items():
            if key in _RESERVED_FIELDS or key in payload:
                continue
            payload[key] = _jsonable(value)
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False)


class _StructuredFormatter(logging.Formatter):
    """Plain-text structured formatter."""

    def __init__(self) -> None:
        super().__init__(
            fmt="%(asctime)sZ %(levelname)s %(name)s [run=%(run_id)s] %(message)s",
            datefmt="%Y-%m-%dT%H:%M:%S",
        )

    def formatTime(  # noqa: N802
        self, record: logging.LogRecord, datefmt: str | None = None
    ) -> str:
        dt = datetime.fromtimestamp(record.created, tz=timezone.utc)
        return dt.strftime(self.datefmt or "%Y-%m-%dT%H:%M:%S")


def configure_logging(level_override: str | None = None) -> None:
    """Configure the global logging system if it has not been configured.

    Records go to stderr; stdout is reserved for reports.
    """

    global _CONFIGURED

    with _CONFIG_LOCK:
        root = logging.getLogger()
        first_configuration = not _CONFIGURED
        if first_configuration:
            handler = logging.StreamHandler(stream=sys.stderr)
            use_json = os.getenv("DEGSEQ_LOG_JSON", "false").lower() == "true"
            handler.addFilter(_RunIdFilter())
            handler.setFormatter(_JsonFormatter() if use_json else _StructuredFormatter())
            root.handlers = [handler]
            _CONFIGURED = True

        level: int | None = None
        if level_override:
            level = getattr(logging, level_override.upper(), logging.WARNING)
        elif first_configuration:
            env_level = os.getenv("DEGSEQ_LOG_LEVEL", "WARNING").upper()
            level = getattr(logging, env_level, logging.WARNING)

        if level is not None:
            root.setLevel(level)


def get_logger(name: str) -> logging.Logger:
    """Return a configured logger instance."""

    configure_logging()
    return logging.getLogger(name)


__all__ = ["get_logger", "configure_logging", "get_run_id"]
