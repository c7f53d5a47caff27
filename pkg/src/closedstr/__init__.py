"""Closed-string structure of byte texts.

Computes border and closedness arrays, enumerates maximal closed
substrings by a quadratic per-suffix scan or by a suffix-tree algorithm
with ordered position sets, and provides a small lab for the extremal
strings that drive the run-count bounds.
"""

from closedstr.core import (
    OcRuns,
    Span,
    as_bytes,
    border_array,
    borders_at,
    is_closed,
    mcs_total_bound,
    oc_array,
    oc_runs,
    repeated_prefix_array,
    sqrt_run_bound,
)
from closedstr.extremal import (
    BoundRow,
    bound_report,
    bound_row,
    extremal_string,
    render_report,
    verify_extremal_oc,
)
from closedstr.fast import FastRun, mcs_fast, run_fast, singleton_mcs
from closedstr.oracle import (
    is_mcs_definitional,
    mcs_definitional,
    mcs_oracle,
    suffix_oc,
    suffix_one_run_total,
)
from closedstr.posset import BEGIN, ClassedPosSets, PosSet, merge
from closedstr.suffixtree import (
    BinarizedTree,
    SuffixTree,
    binarize,
    bottom_up,
    build_suffix_tree,
)

__version__ = "0.1.0"

__all__ = [
    "BEGIN",
    "BinarizedTree",
    "BoundRow",
    "ClassedPosSets",
    "FastRun",
    "OcRuns",
    "PosSet",
    "Span",
    "SuffixTree",
    "as_bytes",
    "binarize",
    "border_array",
    "borders_at",
    "bottom_up",
    "bound_report",
    "bound_row",
    "build_suffix_tree",
    "extremal_string",
    "is_closed",
    "is_mcs_definitional",
    "mcs_definitional",
    "mcs_fast",
    "mcs_oracle",
    "mcs_total_bound",
    "merge",
    "oc_array",
    "oc_runs",
    "render_report",
    "repeated_prefix_array",
    "run_fast",
    "singleton_mcs",
    "sqrt_run_bound",
    "suffix_oc",
    "suffix_one_run_total",
    "verify_extremal_oc",
    "__version__",
]
