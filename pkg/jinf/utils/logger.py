"""
JINF Structured Logging System

This module provides structured JSON logging for the toolkit: construction
and search events, verification check results and error records. Records go
to stderr so that command output on stdout stays machine readable.
"""

import logging
import json
import sys
from datetime import datetime, timezone
from typing import Any, Optional, Dict
from pathlib import Path
import uuid
from contextvars import ContextVar
from logging.handlers import RotatingFileHandler

from jinf.core.config import settings

# Context variable for the verification run correlation ID
run_id_var: ContextVar[Optional[str]] = ContextVar('run_id', default=None)

_RESERVED = set(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


class JSONFormatter(logging.Formatter):
    """
    Custom JSON formatter for structured logging.
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format log record as JSON.

        Args:
            record: Log record to format

        Returns:
            JSON string representation of the log record
        """
        log_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "service": settings.app_name,
            "module": record.module,
            "function": record.funcName,
            "message": record.getMessage(),
        }

        run_id = run_id_var.get()
        if run_id:
            log_data["run_id"] = run_id

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)
            log_data["exception_type"] = record.exc_info[0].__name__ if record.exc_info[0] else None

        # Extra fields passed through `extra=`
        for key, value in record.__dict__.items():
            if key not in _RESERVED and key not in log_data:
                log_data[key] = value

        return json.dumps(log_data, ensure_ascii=False, default=str)


class StructuredLogger:
    """
    Structured logging utility for the JINF toolkit.
    """

    _logger: Optional[logging.Logger] = None
    _file_handler: Optional[RotatingFileHandler] = None

    @classmethod
    def setup_logging(cls, log_file: Optional[Path] = None) -> None:
        """
        Set up structured logging.

        Args:
            log_file: Optional path to log file. If None, logs only to stderr.
        """
        logger = logging.getLogger(settings.app_name)
        level = logging.DEBUG if settings.debug else getattr(
            logging, settings.log_level.upper(), logging.WARNING
        )
        logger.setLevel(logging.DEBUG)

        logger.handlers.clear()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(JSONFormatter())
        logger.addHandler(console_handler)

        log_file = log_file or settings.log_file
        if log_file:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            cls._file_handler = RotatingFileHandler(
                log_file,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5,
                encoding='utf-8'
            )
            cls._file_handler.setLevel(logging.INFO)
            cls._file_handler.setFormatter(JSONFormatter())
            logger.addHandler(cls._file_handler)

        logger.propagate = False

        cls._logger = logger

    @classmethod
    def get_logger(cls) -> logging.Logger:
        """
        Get the toolkit logger instance.

        Returns:
            Logger instance
        """
        if cls._logger is None:
            cls.setup_logging()
        return cls._logger

    @classmethod
    def log_check(
        cls,
        name: str,
        status: str,
        duration_ms: int,
        details: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Log the outcome of one verification check.

        Args:
            name: Registered check name
            status: pass, fail or error
            duration_ms: Check duration in milliseconds
            details: Witness or summary fields
        """
        logger = cls.get_logger()

        level = logging.INFO
        if status == "error":
            level = logging.ERROR
        elif status == "fail":
            level = logging.WARNING

        extra = {
            "type": "check",
            "check": name,
            "status": status,
            "duration_ms": duration_ms,
        }
        if details:
            extra.update(details)

        logger.log(level, f"check {name} - {status} ({duration_ms}ms)", extra=extra)

    @classmethod
    def log_error(
        cls,
        error: Exception,
        context: Optional[Dict[str, Any]] = None
    ) -> None:
        """
        Log error with full stack trace.

        Args:
            error: Exception to log
            context: Additional context information
        """
        logger = cls.get_logger()

        extra = {
            "type": "error",
            "error_type": type(error).__name__,
            "error_message": str(error),
        }

        if context:
            extra.update(context)

        logger.error(
            f"Error: {type(error).__name__} - {str(error)}",
            extra=extra,
            exc_info=error
        )

    @classmethod
    def log_event(cls, action: str, details: Dict[str, Any]) -> None:
        """
        Log a construction or search event.

        Args:
            action: Event name
            details: Additional details about the event
        """
        extra = {"type": "event", "action": action, **details}
        cls.get_logger().debug(f"Event: {action}", extra=extra)

    @classmethod
    def debug(cls, message: str, **kwargs) -> None:
        """Log debug message."""
        cls.get_logger().debug(message, extra=kwargs)

    @classmethod
    def info(cls, message: str, **kwargs) -> None:
        """Log info message."""
        cls.get_logger().info(message, extra=kwargs)

    @classmethod
    def warning(cls, message: str, **kwargs) -> None:
        """Log warning message."""
        cls.get_logger().warning(message, extra=kwargs)

    @classmethod
    def error(cls, message: str, **kwargs) -> None:
        """Log error message."""
        cls.get_logger().error(message, extra=kwargs)


def setup_logging(log_file: Optional[Path] = None) -> None:
    """
    Set up toolkit logging.

    Args:
        log_file: Optional path to log file
    """
    StructuredLogger.setup_logging(log_file)


def get_run_id() -> str:
    """
    Get or create the verification run correlation ID.

    Returns:
        Run ID string
    """
    run_id = run_id_var.get()
    if run_id is None:
        run_id = str(uuid.uuid4())
        run_id_var.set(run_id)
    return run_id


def set_run_id(run_id: Optional[str]) -> None:
    """
    Set the verification run correlation ID.

    Args:
        run_id: Run ID to set
    """
    run_id_var.set(run_id)
