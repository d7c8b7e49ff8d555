"""
cilab: a workbench for CI-quasigroups.

Checks the crossed-inverse identities on finite Cayley tables, derives
the maps J_r and J_l, and verifies by exhaustive search that every
finite left CI-groupoid is a CI-quasigroup.

    pip install cilab

Toggle:
    CILAB=true                   # structured logs on stderr
    CILAB_LEVEL=info             # filter by level (debug/info/warn/error)
    CILAB_FILE=run.jsonl         # also append every entry to a JSONL file

Usage:
    from cilab import table_from_rows, classify, verify_theorem, SearchMode

    z3 = table_from_rows([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    classify(z3).classification          # Classification.CI_LOOP

    verify_theorem(4, SearchMode.PROPAGATE).verified

Command line:
    cilab verify-theorem --max-order 4 --format json

Output:
    [CILAB:span] {"seq":3,"ts":1739512200.1,"at":"_theorem.py:141 verify_theorem",
                  "span":"verify_theorem","span_name":"verify_theorem","ev":"end","ms":812.4}

License: MIT
"""

import os

__version__ = "0.1.0"

# Core configuration
from ._core import (
    enable,
    disable,
    configure,
    is_enabled,
)

# Logging API
from ._api import (
    log,
    log_check,
    log_error,
)

# Tracing
from ._trace import span

# File sink
from ._sink import (
    to_file,
    close_file,
)

# Errors
from ._errors import (
    CilabError,
    WrongLength,
    EntryOutOfRange,
    OrderMismatch,
    NotBijective,
    PreconditionViolated,
    NotALoop,
    OrderTooLarge,
    AmbiguousJ,
    NodeLimitExceeded,
    InvalidWorkerCount,
    ParseError,
    BadHeader,
    BadRow,
    BadJLine,
)

# Algebra core
from ._table import (
    Element,
    TotalMap,
    Permutation,
    CayleyTable,
    identity_map,
    is_bijective,
    compose,
    invert,
    make_table,
    table_from_rows,
    left_translation,
    right_translation,
    transpose,
    is_left_quasigroup,
    is_right_quasigroup,
    is_quasigroup,
    is_latin_square,
    left_identity_elements,
    right_identity_elements,
    identity_element,
    is_automorphism,
    relabel,
    solve_right,
)

# Crossed-inverse identities
from ._ci import (
    Classification,
    CiLoopFlags,
    CiReport,
    check_left_ci,
    check_right_ci,
    check_left_ci_middle,
    check_ci_groupoid,
    translation_form_holds,
    translation_correspondence,
    derive_right_j,
    derive_left_j,
    solve_left,
    ci_loop_report,
    classify,
)

# Search
from ._search import (
    SearchMode,
    CiStructure,
    SearchConfig,
    enumerate_oracle,
    enumerate_propagate,
    enumerate_structures,
    sort_structures,
)

# Isomorphism classes
from ._canonical import (
    CiClass,
    relabel_structure,
    canonical_form,
    classes_of,
    enumerate_classes,
    SearchResult,
    run_search,
)

# Theorem verification
from ._theorem import (
    TheoremReport,
    verify_theorem,
    loops_only,
)

# Random quasigroups
from ._random import random_quasigroup

# Table documents
from ._io import (
    TableDocument,
    parse_table,
    parse_documents,
    render_table,
    render_documents,
    read_table_file,
    read_documents_file,
    write_documents,
)

# Report formats
from ._formats import (
    ReportFormat,
    render_report,
    render_reports,
    render_classes,
)

# Regression expectations
from ._regression import (
    Expectation,
    parse_expectations,
    load_expectations,
    record_expectation,
    compare_to_expectations,
)


def _bootstrap_from_env() -> None:
    """Apply optional environment-driven startup configuration."""
    file_path = os.getenv("CILAB_FILE", "").strip()
    if file_path:
        try:
            to_file(file_path)
        except OSError:
            pass


if is_enabled():
    _bootstrap_from_env()

__all__ = [
    # Version
    "__version__",
    # Configuration
    "enable",
    "disable",
    "configure",
    "is_enabled",
    # Logging
    "log",
    "log_check",
    "log_error",
    "span",
    "to_file",
    "close_file",
    # Errors
    "CilabError",
    "WrongLength",
    "EntryOutOfRange",
    "OrderMismatch",
    "NotBijective",
    "PreconditionViolated",
    "NotALoop",
    "OrderTooLarge",
    "AmbiguousJ",
    "NodeLimitExceeded",
    "InvalidWorkerCount",
    "ParseError",
    "BadHeader",
    "BadRow",
    "BadJLine",
    # Algebra core
    "Element",
    "TotalMap",
    "Permutation",
    "CayleyTable",
    "identity_map",
    "is_bijective",
    "compose",
    "invert",
    "make_table",
    "table_from_rows",
    "left_translation",
    "right_translation",
    "transpose",
    "is_left_quasigroup",
    "is_right_quasigroup",
    "is_quasigroup",
    "is_latin_square",
    "left_identity_elements",
    "right_identity_elements",
    "identity_element",
    "is_automorphism",
    "relabel",
    "solve_right",
    # CI identities
    "Classification",
    "CiLoopFlags",
    "CiReport",
    "check_left_ci",
    "check_right_ci",
    "check_left_ci_middle",
    "check_ci_groupoid",
    "translation_form_holds",
    "translation_correspondence",
    "derive_right_j",
    "derive_left_j",
    "solve_left",
    "ci_loop_report",
    "classify",
    # Search
    "SearchMode",
    "CiStructure",
    "SearchConfig",
    "enumerate_oracle",
    "enumerate_propagate",
    "enumerate_structures",
    "sort_structures",
    "CiClass",
    "relabel_structure",
    "canonical_form",
    "classes_of",
    "SearchResult",
    "run_search",
    "enumerate_classes",
    "TheoremReport",
    "verify_theorem",
    "loops_only",
    "random_quasigroup",
    # Table documents
    "TableDocument",
    "parse_table",
    "parse_documents",
    "render_table",
    "render_documents",
    "read_table_file",
    "read_documents_file",
    "write_documents",
    # Reports
    "ReportFormat",
    "render_report",
    "render_reports",
    "render_classes",
    # Regression expectations
    "Expectation",
    "parse_expectations",
    "load_expectations",
    "record_expectation",
    "compare_to_expectations",
]
