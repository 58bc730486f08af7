"""
JINF Utilities Package

This package contains utility modules for logging, error handling,
and response formatting.
"""

from jinf.utils.logger import (
    StructuredLogger,
    setup_logging,
    get_run_id,
    set_run_id,
)
from jinf.utils.exceptions import (
    JINFException,
    AlgebraError,
    GraphError,
    AutomorphismError,
    OracleError,
    ExpressionError,
    ParseError,
    EvalError,
)
from jinf.utils.responses import (
    CommandResponse,
    CheckResult,
    SuiteReport,
    RestrictionFailure,
    RestrictionReport,
)

__all__ = [
    "StructuredLogger",
    "setup_logging",
    "get_run_id",
    "set_run_id",
    "JINFException",
    "AlgebraError",
    "GraphError",
    "AutomorphismError",
    "OracleError",
    "ExpressionError",
    "ParseError",
    "EvalError",
    "CommandResponse",
    "CheckResult",
    "SuiteReport",
    "RestrictionFailure",
    "RestrictionReport",
]
