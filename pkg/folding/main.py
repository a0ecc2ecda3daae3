# folding/main.py

import sys
from typing import Optional, Sequence, TextIO

import folding.core.logging  # noqa: F401  configures the "folding" logger
from folding.cli.routers import build_parser
from folding.core.utils import error_handlers
from folding.core.utils.exceptions import FoldingException


def main(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one CLI command and return its exit code.

    0 means success or agreement, 1 a mismatch or internal failure and
    2 a usage error.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args, stdout)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    except FoldingException as exc:
        return error_handlers.handle_folding_exception(exc, stderr)
    except Exception as exc:
        return error_handlers.handle_unexpected_exception(exc, stderr)


if __name__ == "__main__":
    sys.exit(main())
