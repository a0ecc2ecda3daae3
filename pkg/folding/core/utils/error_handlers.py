# folding/core/utils/error_handlers.py

import logging
import sys
from typing import TextIO

from folding.core.utils.exceptions import EXIT_FAILURE, FoldingException
from folding.core.utils.response import render_json, standard_response

logger = logging.getLogger("folding")


def handle_folding_exception(exc: FoldingException, stream: TextIO = None) -> int:
    """Report a known application error and return its exit code."""
    stream = stream or sys.stderr
    logger.error(
        f"{type(exc).__name__}: {exc.detail}",
    )
    stream.write(
        render_json(
            standard_response(
                status="error",
                message=str(exc.detail),
                data={"error": type(exc).__name__, "exit_code": exc.exit_code},
            )
        )
    )
    return exc.exit_code


def handle_unexpected_exception(exc: Exception, stream: TextIO = None) -> int:
    """Report an unexpected error with its traceback in the log."""
    stream = stream or sys.stderr
    logger.error("An unexpected error occurred", exc_info=exc)
    stream.write(
        render_json(
            standard_response(
                status="error",
                message="An unexpected error occurred.",
                data={"error": type(exc).__name__, "exit_code": EXIT_FAILURE},
            )
        )
    )
    return EXIT_FAILURE
