"""
JINF Main Entry Point

This module wires logging and configuration to the `jinf` command group.
"""

import sys
from typing import Optional, Sequence

from jinf.cli.commands import cli
from jinf.core.config import settings
from jinf.utils.logger import StructuredLogger

# Initialize logger
logger = StructuredLogger.get_logger()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the command line and return its exit code.

    Args:
        argv: Arguments without the program name (defaults to sys.argv)

    Returns:
        0 on success, 1 on a failed check or operation error, 2 on usage errors
    """
    logger.debug(
        f"Starting {settings.app_name} v{settings.app_version}",
        extra={"app_name": settings.app_name, "version": settings.app_version, "event": "startup"},
    )
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="jinf")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
