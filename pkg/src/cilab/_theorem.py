"""
Exhaustive check that every left CI-groupoid of a given order is a
CI-quasigroup.

For each enumerated (table, jr):
    (a) the table is a quasigroup
    (b) jr is bijective
    (c) the right CI identity holds with jr⁻¹
    (d) jr is the only map satisfying the left CI identity
Loops found along the way are also checked for x·jr(x) = 1 and jr being
an automorphism.
"""

import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple

from . import _core
from ._api import log, log_check
from ._canonical import classes_of
from ._ci import check_right_ci, ci_loop_report, derive_right_j
from ._errors import AmbiguousJ
from ._search import CiStructure, SearchConfig, SearchMode, enumerate_structures, sort_structures
from ._table import identity_element, invert, is_bijective, is_quasigroup
from ._trace import span


@dataclass(frozen=True)
class TheoremReport:
    order: int
    mode: SearchMode
    pair_count: int
    table_count: int
    class_count: Optional[int]
    all_are_quasigroups: bool
    all_jr_bijective: bool
    all_right_ci_with_jr_inverse: bool
    all_j_unique: bool
    failures: Tuple[CiStructure, ...]
    elapsed: float
    loop_count: int = 0
    all_loops_artzy: bool = True

    @property
    def verified(self) -> bool:
        return (
            self.all_are_quasigroups
            and self.all_jr_bijective
            and self.all_right_ci_with_jr_inverse
            and self.all_j_unique
            and not self.failures
        )


@dataclass
class TheoremTally:
    """Running totals; merge is associative and commutative."""

    pair_count: int = 0
    tables: Set[Tuple[int, ...]] = field(default_factory=set)
    all_are_quasigroups: bool = True
    all_jr_bijective: bool = True
    all_right_ci_with_jr_inverse: bool = True
    all_j_unique: bool = True
    failures: List[CiStructure] = field(default_factory=list)
    loop_count: int = 0
    all_loops_artzy: bool = True

    def add(self, s: CiStructure) -> None:
        table, jr = s.table, s.jr
        self.pair_count += 1
        self.tables.add(table.entries)

        quasigroup = is_quasigroup(table)
        bijective = is_bijective(jr)
        right_ci = bijective and check_right_ci(table, invert(jr))
        try:
            unique = derive_right_j(table) == jr
        except AmbiguousJ:
            unique = False

        self.all_are_quasigroups &= quasigroup
        self.all_jr_bijective &= bijective
        self.all_right_ci_with_jr_inverse &= right_ci
        self.all_j_unique &= unique
        if not (quasigroup and bijective and right_ci and unique):
            self.failures.append(s)
            log_check(
                False, "left CI structure fails the theorem checks",
                entries=list(table.entries), jr=list(jr.image),
                quasigroup=quasigroup, bijective=bijective, right_ci=right_ci, unique=unique,
            )

        if quasigroup and identity_element(table) is not None:
            self.loop_count += 1
            flags = ci_loop_report(table, jr)
            self.all_loops_artzy &= flags.x_times_jx_is_identity and flags.j_is_automorphism

    def merge(self, other: "TheoremTally") -> "TheoremTally":
        return TheoremTally(
            pair_count=self.pair_count + other.pair_count,
            tables=self.tables | other.tables,
            all_are_quasigroups=self.all_are_quasigroups and other.all_are_quasigroups,
            all_jr_bijective=self.all_jr_bijective and other.all_jr_bijective,
            all_right_ci_with_jr_inverse=(
                self.all_right_ci_with_jr_inverse and other.all_right_ci_with_jr_inverse
            ),
            all_j_unique=self.all_j_unique and other.all_j_unique,
            failures=sort_structures(self.failures + other.failures),
            loop_count=self.loop_count + other.loop_count,
            all_loops_artzy=self.all_loops_artzy and other.all_loops_artzy,
        )


def tally(structures: Sequence[CiStructure]) -> TheoremTally:
    t = TheoremTally()
    for s in structures:
        t.add(s)
    return t


def verify_theorem(
    n: int,
    mode: SearchMode = SearchMode.PROPAGATE,
    worker_count: Optional[int] = None,
    node_limit: Optional[int] = None,
    prune_rows: bool = True,
) -> TheoremReport:
    """
    Enumerate every left CI structure of order n and check the theorem on
    each. Failures are collected in the report, never dropped.

    Example:
        >>> verify_theorem(3, SearchMode.ORACLE).pair_count
        6
    """
    kwargs = {} if worker_count is None else {"worker_count": worker_count}
    config = SearchConfig(n, mode, node_limit=node_limit, prune_rows=prune_rows, **kwargs)
    t0 = time.perf_counter()
    with span("verify_theorem", order=n, mode=config.mode.value):
        structures = enumerate_structures(config)
        totals = tally(structures)
        class_count = len(classes_of(structures)) if n <= _core.canonical_max() else None
    elapsed = time.perf_counter() - t0

    report = TheoremReport(
        order=n,
        mode=config.mode,
        pair_count=totals.pair_count,
        table_count=len(totals.tables),
        class_count=class_count,
        all_are_quasigroups=totals.all_are_quasigroups,
        all_jr_bijective=totals.all_jr_bijective,
        all_right_ci_with_jr_inverse=totals.all_right_ci_with_jr_inverse,
        all_j_unique=totals.all_j_unique,
        failures=tuple(sort_structures(totals.failures)),
        elapsed=elapsed,
        loop_count=totals.loop_count,
        all_loops_artzy=totals.all_loops_artzy,
    )
    log(
        "theorem checked", tag="report", order=n, mode=config.mode.value,
        pairs=report.pair_count, verified=report.verified,
    )
    return report


def loops_only(structures: Sequence[CiStructure]) -> List[CiStructure]:
    """The CI-loops among the structures (those with an identity element)."""
    return [
        s for s in structures
        if is_quasigroup(s.table) and identity_element(s.table) is not None
    ]
