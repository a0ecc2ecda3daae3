# folding/core/logging.py

import functools
import json
import logging
import sys
import time
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Callable

from folding.core.config import settings

ENV = settings.APP_ENV

# ---------------------------
# Logger setup
# ---------------------------
logger = logging.getLogger("folding")
logger.setLevel(settings.LOG_LEVEL.upper())
logger.propagate = False

EXTRA_FIELDS = (
    "command",
    "algebra",
    "q",
    "k",
    "method",
    "cardinality",
    "completed_in_ms",
)


# ---------------------------
# JSON formatter
# ---------------------------
class JsonFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord):
        log_entry = {
            "datetime": self.formatTime(record),
            "level": record.levelname,
            "message": record.getMessage(),
        }
        for field in EXTRA_FIELDS:
            log_entry[field] = getattr(record, field, None)
        if record.exc_info:
            log_entry["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_entry)


# ---------------------------
# Remove existing handlers
# ---------------------------
if logger.hasHandlers():
    logger.handlers.clear()

# ---------------------------
# Console and file handlers
# ---------------------------
# stdout carries command output, so the console handler writes to stderr
if ENV != "development":
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(JsonFormatter())
    logger.addHandler(console_handler)

if ENV != "production":
    log_dir = Path(__file__).parent.parent.parent / "logs"
    log_dir.mkdir(exist_ok=True)
    file_handler = RotatingFileHandler(
        log_dir / "folding.log", maxBytes=5_000_000, backupCount=3
    )
    file_handler.setFormatter(JsonFormatter())
    logger.addHandler(file_handler)


# ---------------------------
# Helper: descriptive messages
# ---------------------------
def get_command_log_message(exit_code: int) -> str:
    """Return a descriptive log message for a command's exit code."""
    if exit_code == 0:
        return "Command completed"
    elif exit_code == 1:
        return "Command reported a failure"
    elif exit_code == 2:
        return "Command rejected its arguments"
    else:
        return "Command exited with unexpected code"


def log_command(name: str) -> Callable:
    """Time a CLI command handler and log its outcome.

    Args:
        name: Subcommand name recorded in the log entry.

    Returns:
        Callable: Decorator for handlers returning an exit code.
    """

    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> int:
            start = time.perf_counter()
            exit_code = func(*args, **kwargs)
            completed_in_ms = round((time.perf_counter() - start) * 1000, 2)
            level = logging.INFO if exit_code == 0 else logging.WARNING
            logger.log(
                level,
                get_command_log_message(exit_code),
                extra={"command": name, "completed_in_ms": completed_in_ms},
            )
            return exit_code

        return wrapper

    return decorator
