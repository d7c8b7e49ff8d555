"""
Isomorphism canonicalization of CI structures.

A relabeling sigma sends (table, jr) to the structure with
sigma(x)·'sigma(y) = sigma(x·y) and jr' = sigma∘jr∘sigma⁻¹. The canonical
form is the lexicographically least image over all n! relabelings,
comparing the flattened table first and jr second.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from . import _core
from ._errors import OrderTooLarge
from ._search import CiStructure, SearchConfig, SearchMode, enumerate_structures
from ._table import CayleyTable, TotalMap, compose, invert, relabel
from ._trace import span

_Key = Tuple[int, ...]


def relabel_structure(s: CiStructure, sigma: TotalMap) -> CiStructure:
    return CiStructure(
        relabel(s.table, sigma),
        compose(compose(sigma, s.jr), invert(sigma)),
    )


@lru_cache(maxsize=None)
def _relabelings(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """All permutations of range(n) as rows, with their inverses."""
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return perms, np.argsort(perms, axis=1)


def _orbit_keys(s: CiStructure) -> np.ndarray:
    """
    Every relabeled copy of s as one row: flattened table then jr.
    Shape (n!, n² + n).
    """
    n = s.order
    limit = _core.canonical_max()
    if n > limit:
        raise OrderTooLarge(n, limit, "canonical_form")
    perms, invs = _relabelings(n)
    k = np.arange(len(perms))
    grid = s.table.grid
    jr = np.array(s.jr.image, dtype=np.int64)

    mapped = perms[:, grid]                                   # sigma(x·y)
    tables = mapped[k[:, None, None], invs[:, :, None], invs[:, None, :]]
    maps = perms[k[:, None], jr[invs]]                         # sigma(jr(sigma⁻¹ a))
    return np.concatenate([tables.reshape(len(perms), n * n), maps], axis=1)


def _least(keys: np.ndarray) -> _Key:
    # lexsort treats the last column as primary
    order = np.lexsort(keys.T[::-1])
    return tuple(keys[order[0]].tolist())


def _structure_from_key(n: int, key: _Key) -> CiStructure:
    return CiStructure(CayleyTable(n, key[:n * n]), TotalMap(key[n * n:]))


def canonical_form(s: CiStructure) -> CiStructure:
    """
    Least relabeled copy of s. Idempotent; isomorphic inputs give equal
    outputs.

    Raises:
        OrderTooLarge: order above the configured canonicalization cap.
    """
    return _structure_from_key(s.order, _least(_orbit_keys(s)))


@dataclass(frozen=True)
class CiClass:
    """One isomorphism class: its canonical representative and member count."""

    representative: CiStructure
    size: int


def classes_of(structures: Sequence[CiStructure]) -> List[CiClass]:
    """
    Group structures into isomorphism classes, sorted by representative.
    Each class is computed once from the orbit of its first member.
    """
    pending = {s.table.entries + s.jr.image: s for s in structures}
    classes: List[CiClass] = []
    seen: Set[_Key] = set()
    for key, s in pending.items():
        if key in seen:
            continue
        orbit_rows = _orbit_keys(s)
        orbit = {tuple(row) for row in orbit_rows.tolist()}
        members = orbit.intersection(pending)
        seen |= members
        classes.append(CiClass(_structure_from_key(s.order, _least(orbit_rows)), len(members)))
    classes.sort(key=lambda c: c.representative.sort_key)
    return classes


@dataclass(frozen=True)
class SearchResult:
    """Structures found for one config, plus their classes when requested."""

    config: SearchConfig
    structures: List[CiStructure]
    classes: Optional[List[CiClass]] = None

    @property
    def written(self) -> List[CiStructure]:
        """Class representatives when grouped, else every structure."""
        if self.classes is None:
            return self.structures
        return [c.representative for c in self.classes]


def run_search(config: SearchConfig) -> SearchResult:
    """Enumerate per config; group into classes when up_to_isomorphism is set."""
    structures = enumerate_structures(config)
    if not config.up_to_isomorphism:
        return SearchResult(config, structures)
    with span("classes", order=config.order, pairs=len(structures)):
        return SearchResult(config, structures, classes_of(structures))


def enumerate_classes(
    n: int,
    mode: SearchMode = SearchMode.PROPAGATE,
    worker_count: Optional[int] = None,
    node_limit: Optional[int] = None,
) -> List[CiClass]:
    """
    One representative per isomorphism class of left CI structures of
    order n, with class sizes summing to the number of structures.
    """
    kwargs = {} if worker_count is None else {"worker_count": worker_count}
    config = SearchConfig(n, mode, up_to_isomorphism=True, node_limit=node_limit, **kwargs)
    return run_search(config).classes
