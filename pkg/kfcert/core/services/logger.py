"""
Logger Service

Configures the ``kfcert`` logger hierarchy once, with plain or JSON output.
Library modules log through ``logging.getLogger(__name__)``; this service
only decides where records go and how they look.
"""

import json
import logging
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional, TextIO

from dotenv import load_dotenv

_RESERVED = set(logging.LogRecord("", 0, "", 0, "", (), None).__dict__) | {"message", "asctime"}


class LoggerService:
    """
    Owns the handlers of the ``kfcert`` logger.

    Output goes to stderr by default so stdout stays free for graph6 and
    JSON reports. Context set with ``set_context`` is attached to every
    record emitted through the service's own methods.
    """

    def __init__(
        self,
        name: str = "kfcert",
        level: str = "WARNING",
        log_file: Optional[Path] = None,
        json_format: bool = False,
        include_timestamp: bool = True,
        stream: Optional[TextIO] = None,
    ):
        self._logger = logging.getLogger(name)
        level_value = logging.getLevelName(level.upper())
        if not isinstance(level_value, int):
            raise ValueError(f"unknown log level {level!r}")
        self._logger.setLevel(level_value)
        self._logger.propagate = False
        self._context: Dict[str, Any] = {}

        self._logger.handlers.clear()

        if json_format:
            formatter: logging.Formatter = JsonFormatter(include_timestamp=include_timestamp)
        else:
            fmt = "%(name)s - %(levelname)s - %(message)s"
            if include_timestamp:
                fmt = "%(asctime)s - " + fmt
            formatter = logging.Formatter(fmt)

        console_handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
        console_handler.setFormatter(formatter)
        self._logger.addHandler(console_handler)

        if log_file:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            self._logger.addHandler(file_handler)

    @classmethod
    def from_environment(
        cls, level: Optional[str] = None, json_format: Optional[bool] = None, **kwargs: Any
    ) -> "LoggerService":
        """Explicit arguments win over ``KFCERT_LOG_LEVEL`` / ``KFCERT_LOG_JSON`` (read from .env too)."""
        load_dotenv()
        if level is None:
            level = os.getenv("KFCERT_LOG_LEVEL", "WARNING")
        if json_format is None:
            json_format = os.getenv("KFCERT_LOG_JSON", "").lower() in ("1", "true", "yes")
        return cls(level=level, json_format=json_format, **kwargs)

    def _log(self, level: int, message: str, **kwargs: Any) -> None:
        self._logger.log(level, message, extra={**self._context, **kwargs})

    def debug(self, message: str, **kwargs: Any) -> None:
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self._log(logging.ERROR, message, **kwargs)

    def set_context(self, **kwargs: Any) -> None:
        """Persistent context for all future logs"""
        self._context.update(kwargs)

    def clear_context(self) -> None:
        self._context.clear()

    def get_logger(self) -> logging.Logger:
        return self._logger


class JsonFormatter(logging.Formatter):
    """One JSON object per record; ``extra=`` keys are folded in at top level."""

    def __init__(self, include_timestamp: bool = True):
        super().__init__()
        self._include_timestamp = include_timestamp

    def format(self, record: logging.LogRecord) -> str:
        log_data: Dict[str, Any] = {
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }
        if self._include_timestamp:
            log_data["timestamp"] = datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat()

        for key, value in record.__dict__.items():
            if key not in _RESERVED:
                log_data[key] = value

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, default=str)
