"""
Seeded random Latin squares, used as property-test input.

Cells are filled row-major by backtracking with a random value order per
cell. A fill that backtracks too often is abandoned and restarted from the
same generator stream, so a seed always yields the same table.
"""

from typing import List, Optional

import numpy as np

from . import _core
from ._api import log
from ._errors import OrderTooLarge, WrongLength
from ._table import CayleyTable


def _backtrack_budget(n: int) -> int:
    return 50 * n * n


def _try_fill(n: int, rng: np.random.Generator) -> Optional[List[int]]:
    cells = [-1] * (n * n)
    row_used = [[False] * n for _ in range(n)]
    col_used = [[False] * n for _ in range(n)]
    orders: List[Optional[List[int]]] = [None] * (n * n)
    cursor = [0] * (n * n)
    budget = _backtrack_budget(n)

    i = 0
    while i < n * n:
        x, y = divmod(i, n)
        candidates = orders[i]
        if candidates is None:
            candidates = [int(v) for v in rng.permutation(n)]
            orders[i] = candidates
            cursor[i] = 0
        placed = False
        while cursor[i] < n:
            v = candidates[cursor[i]]
            cursor[i] += 1
            if not row_used[x][v] and not col_used[y][v]:
                cells[i] = v
                row_used[x][v] = col_used[y][v] = True
                placed = True
                break
        if placed:
            i += 1
            continue

        # dead end: step back one cell and try its next value
        orders[i] = None
        budget -= 1
        if budget < 0 or i == 0:
            return None
        i -= 1
        x, y = divmod(i, n)
        v = cells[i]
        row_used[x][v] = col_used[y][v] = False
        cells[i] = -1
    return cells


def random_quasigroup(n: int, seed: int) -> CayleyTable:
    """
    A random Latin square of order n, deterministic in seed.

    Raises:
        OrderTooLarge: n above the configured cap for random tables.
    """
    if n < 1:
        raise WrongLength(f"order must be at least 1, got {n}")
    limit = _core.random_max()
    if n > limit:
        raise OrderTooLarge(n, limit, "random_quasigroup")
    rng = np.random.default_rng(seed)
    restarts = 0
    while True:
        cells = _try_fill(n, rng)
        if cells is not None:
            break
        restarts += 1
    if restarts:
        log("random fill restarted", tag="search", order=n, seed=seed, restarts=restarts)
    return CayleyTable(n, tuple(cells))
