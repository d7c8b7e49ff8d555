"""
Enumeration of left CI-groupoids of a fixed order.

Two independent engines produce the same set of (table, J_r) pairs:

    ORACLE     every n^(n²) table against every n^n map, nothing assumed.
    PROPAGATE  backtracking over rows and J_r values. Choosing J_r(x) = z
               and x·y = c forces c·z = y; rows are filled as permutations
               (every left CI-groupoid is a left quasigroup). Columns are
               never pruned on, so the theorem is still checked downstream.

Results are sorted by (flattened table, J_r) whatever the worker count.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from . import _core
from ._api import log
from ._ci import check_left_ci
from ._errors import InvalidWorkerCount, NodeLimitExceeded, OrderTooLarge, WrongLength
from ._table import CayleyTable, Element, TotalMap
from ._trace import span


class SearchMode(str, Enum):
    ORACLE = "oracle"
    PROPAGATE = "propagate"


@dataclass(frozen=True)
class CiStructure:
    """A left CI-groupoid: a table with a map satisfying (x·y)·jr(x) = y."""

    table: CayleyTable
    jr: TotalMap

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def sort_key(self) -> Tuple[Tuple[Element, ...], Tuple[Element, ...]]:
        return (self.table.entries, self.jr.image)


def sort_structures(structures: Iterable[CiStructure]) -> List[CiStructure]:
    return sorted(structures, key=lambda s: s.sort_key)


@dataclass(frozen=True)
class SearchConfig:
    """
    How to enumerate one order.

    prune_rows switches off the row-permutation pruning of PROPAGATE; the
    search stays complete without it, only slower. up_to_isomorphism is
    read by run_search, which then also groups the result into classes.
    """

    order: int
    mode: SearchMode = SearchMode.PROPAGATE
    up_to_isomorphism: bool = False
    worker_count: int = field(default_factory=_core.default_workers)
    node_limit: Optional[int] = None
    prune_rows: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", SearchMode(self.mode))
        _check_order(self.order, _limit_for(self.mode), f"{self.mode.value} enumeration")
        _check_workers(self.worker_count)


def _limit_for(mode: SearchMode) -> int:
    if mode is SearchMode.ORACLE:
        return _core.ORACLE_MAX_ORDER
    return _core.propagate_max()


def _check_order(n: int, limit: int, what: str) -> None:
    if n < 1:
        raise WrongLength(f"{what}: order must be at least 1, got {n}")
    if n > limit:
        raise OrderTooLarge(n, limit, what)


def _check_workers(count: int) -> None:
    if count < 1:
        raise InvalidWorkerCount(count)


# ---------------------------------------------------------------------------
# Ground-truth oracle
# ---------------------------------------------------------------------------

def enumerate_oracle(n: int) -> List[CiStructure]:
    """
    Every (table, map) pair of order n satisfying the left CI identity,
    by checking all n^(n²) tables against all n^n maps.

    Raises:
        OrderTooLarge: n > 3.
    """
    _check_order(n, _core.ORACLE_MAX_ORDER, "oracle enumeration")
    maps = [TotalMap(image) for image in itertools.product(range(n), repeat=n)]
    found: List[CiStructure] = []
    with span("oracle", order=n):
        for entries in itertools.product(range(n), repeat=n * n):
            table = CayleyTable(n, entries)
            for j in maps:
                if check_left_ci(table, j):
                    found.append(CiStructure(table, j))
    log("oracle done", tag="enumerate", order=n, pairs=len(found))
    return sort_structures(found)


# ---------------------------------------------------------------------------
# Propagation engine
# ---------------------------------------------------------------------------

_UNSET = -1


class PartialTable:
    """Search-time grid: entries are unset (None) until assigned."""

    def __init__(self, order: int):
        self.order = order
        self.cells: List[int] = [_UNSET] * (order * order)
        # row_counts[x][v]: how often v occurs in row x
        self.row_counts: List[List[int]] = [[0] * order for _ in range(order)]

    def entry(self, x: Element, y: Element) -> Optional[Element]:
        v = self.cells[x * self.order + y]
        return None if v == _UNSET else v

    def is_complete(self) -> bool:
        return _UNSET not in self.cells

    def to_table(self) -> CayleyTable:
        if not self.is_complete():
            raise ValueError("partial table still has unset cells")
        return CayleyTable(self.order, tuple(self.cells))


class _Propagation:
    """PartialTable plus a partial J_r, with an undo trail."""

    def __init__(self, n: int, prune_rows: bool, node_limit: Optional[int]):
        self.n = n
        self.prune_rows = prune_rows
        self.node_limit = node_limit
        self.partial = PartialTable(n)
        self.jr: List[int] = [_UNSET] * n
        self.trail: List[int] = []
        self.nodes = 0
        self.found: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def assign(self, a: int, b: int, v: int) -> bool:
        """Set a·b = v and everything it forces; False on conflict."""
        n = self.n
        cells = self.partial.cells
        counts = self.partial.row_counts
        jr = self.jr
        pending = [(a, b, v)]
        while pending:
            a, b, v = pending.pop()
            idx = a * n + b
            current = cells[idx]
            if current == v:
                continue
            if current != _UNSET:
                return False
            if self.prune_rows and counts[a][v]:
                return False
            cells[idx] = v
            counts[a][v] += 1
            self.trail.append(idx)
            z = jr[a]
            if z != _UNSET:
                # (a·b)·jr(a) = b
                pending.append((v, z, b))
        return True

    def set_jr(self, x: int, z: int) -> bool:
        self.jr[x] = z
        row = x * self.n
        cells = self.partial.cells
        for y in range(self.n):
            v = cells[row + y]
            if v != _UNSET and not self.assign(v, z, y):
                return False
        return True

    def undo(self, mark: int) -> None:
        n = self.n
        cells = self.partial.cells
        counts = self.partial.row_counts
        trail = self.trail
        while len(trail) > mark:
            idx = trail.pop()
            counts[idx // n][cells[idx]] -= 1
            cells[idx] = _UNSET

    def _tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise NodeLimitExceeded(self.node_limit)

    def search_row(self, x: int) -> None:
        if x == self.n:
            self.found.append((tuple(self.partial.cells), tuple(self.jr)))
            return
        for z in range(self.n):
            mark = len(self.trail)
            if self.set_jr(x, z):
                self.fill(x, 0)
            self.undo(mark)
            self.jr[x] = _UNSET

    def fill(self, x: int, y: int) -> None:
        self._tick()
        n = self.n
        cells = self.partial.cells
        row = x * n
        while y < n and cells[row + y] != _UNSET:
            y += 1
        if y == n:
            self.search_row(x + 1)
            return
        counts = self.partial.row_counts[x]
        for c in range(n):
            if self.prune_rows and counts[c]:
                continue
            mark = len(self.trail)
            if self.assign(x, y, c):
                self.fill(x, y + 1)
            self.undo(mark)


_Branch = Tuple[int, int, Tuple[int, ...], bool, Optional[int]]


def _top_level_branches(n: int, prune_rows: bool, node_limit: Optional[int]) -> List[_Branch]:
    """One branch per choice of jr(0) and row 0."""
    rows: Iterable[Tuple[int, ...]]
    if prune_rows:
        rows = itertools.permutations(range(n))
    else:
        rows = itertools.product(range(n), repeat=n)
    rows = list(rows)
    return [(n, z, row, prune_rows, node_limit) for z in range(n) for row in rows]


def _run_branch(branch: _Branch) -> Tuple[List[Tuple[Tuple[int, ...], Tuple[int, ...]]], int]:
    """Worker entry point; returns plain tuples and the node count."""
    n, z, row, prune_rows, node_limit = branch
    engine = _Propagation(n, prune_rows, node_limit)
    engine.set_jr(0, z)
    if all(engine.assign(0, y, c) for y, c in enumerate(row)):
        engine.fill(0, 0)
    return engine.found, engine.nodes


def enumerate_propagate(
    n: int,
    worker_count: Optional[int] = None,
    node_limit: Optional[int] = None,
    prune_rows: bool = True,
) -> List[CiStructure]:
    """
    Every left CI structure of order n by propagation search.

    Raises:
        OrderTooLarge: n above the configured propagation cap.
        NodeLimitExceeded: more than node_limit search nodes in total.
        InvalidWorkerCount: worker_count below one.
    """
    _check_order(n, _core.propagate_max(), "propagate enumeration")
    workers = worker_count if worker_count is not None else _core.default_workers()
    _check_workers(workers)
    branches = _top_level_branches(n, prune_rows, node_limit)

    with span("propagate", order=n, workers=workers, branches=len(branches)):
        if workers > 1:
            chunk = max(1, len(branches) // (workers * 4))
            with ProcessPoolExecutor(max_workers=workers) as executor:
                results = list(executor.map(_run_branch, branches, chunksize=chunk))
        else:
            results = [_run_branch(b) for b in branches]

    nodes = sum(count for _, count in results)
    if node_limit is not None and nodes > node_limit:
        raise NodeLimitExceeded(node_limit)

    structures = [
        CiStructure(CayleyTable(n, entries), TotalMap(jr))
        for found, _ in results
        for entries, jr in found
    ]
    if _core.debug_checks():
        for s in structures:
            if not check_left_ci(s.table, s.jr):
                raise AssertionError(f"propagation produced a non-CI pair {s}")
    log("propagate done", tag="enumerate", order=n, pairs=len(structures), nodes=nodes)
    return sort_structures(structures)


def enumerate_structures(config: SearchConfig) -> List[CiStructure]:
    """Dispatch on config.mode."""
    if config.mode is SearchMode.ORACLE:
        return enumerate_oracle(config.order)
    return enumerate_propagate(
        config.order,
        worker_count=config.worker_count,
        node_limit=config.node_limit,
        prune_rows=config.prune_rows,
    )


def structure_set(structures: Sequence[CiStructure]) -> set:
    """Order-free view used when comparing engines."""
    return {s.sort_key for s in structures}
