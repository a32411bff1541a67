"""Exact symbolic verification of two-parameter graded R-matrices and the
associated current-algebra relation catalog."""

from ._core import (  # noqa: F401
    affine_r_entries,
    expr_eq,
    extract_entry,
    parse_expr,
    run_all,
    verify,
)

__all__ = [
    "affine_r_entries",
    "expr_eq",
    "extract_entry",
    "parse_expr",
    "run_all",
    "verify",
]
