"""
JINF Command Line Package

Set expression language, permutation/automorphism specs, the `jinf` click
group (jinf.cli.commands) and the verification suite (jinf.cli.suite).
"""

from jinf.cli.expressions import GRAMMAR, canonical_expr, eval_set_expr, parse_set, parse_set_expr, render, render_set

__all__ = [
    "GRAMMAR",
    "canonical_expr",
    "eval_set_expr",
    "parse_set",
    "parse_set_expr",
    "render",
    "render_set",
]
