"""
Cayley tables, total maps and the structural predicates built on them.

Elements are 0-based indices into {0..n-1}. A table stores x·y at row x,
column y, dense and row-major. Maps compose as (f∘g)(x) = f(g(x)), so the
translation identity R_{J x} L_x = ε reads "apply L_x first".
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from . import _core
from ._errors import EntryOutOfRange, NotBijective, OrderMismatch, OrderTooLarge, WrongLength

Element = int


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TotalMap:
    """A map of {0..n-1} into itself; image[x] = f(x)."""

    image: Tuple[Element, ...]

    def __post_init__(self) -> None:
        image = tuple(int(v) for v in self.image)
        n = len(image)
        for x, v in enumerate(image):
            if not 0 <= v < n:
                raise EntryOutOfRange(f"image of {x} is {v}, outside 0..{n - 1}")
        object.__setattr__(self, "image", image)

    @property
    def order(self) -> int:
        return len(self.image)

    def __call__(self, x: Element) -> Element:
        return self.image[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalMap):
            return NotImplemented
        return self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.image)})"


class Permutation(TotalMap):
    """A bijective TotalMap."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(set(self.image)) != len(self.image):
            raise NotBijective(f"{list(self.image)} repeats an image")


def identity_map(n: int) -> Permutation:
    """ε on {0..n-1}."""
    return Permutation(tuple(range(n)))


def is_bijective(m: TotalMap) -> bool:
    return len(set(m.image)) == m.order


def compose(f: TotalMap, g: TotalMap) -> TotalMap:
    """(f∘g)(x) = f(g(x))."""
    if f.order != g.order:
        raise OrderMismatch(f"cannot compose maps of order {f.order} and {g.order}")
    fi = f.image
    return TotalMap(tuple(fi[y] for y in g.image))


def invert(p: TotalMap) -> Permutation:
    if not is_bijective(p):
        raise NotBijective(f"{list(p.image)} has no inverse")
    inv = [0] * p.order
    for x, y in enumerate(p.image):
        inv[y] = x
    return Permutation(tuple(inv))


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CayleyTable:
    """The operation of a groupoid on {0..order-1}; entries[x*order + y] = x·y.

    Build through make_table (validating); the constructor trusts its input.
    """

    order: int
    entries: Tuple[Element, ...] = field(repr=False)

    def entry(self, x: Element, y: Element) -> Element:
        return self.entries[x * self.order + y]

    def rows(self) -> List[Tuple[Element, ...]]:
        n = self.order
        return [self.entries[i * n:(i + 1) * n] for i in range(n)]

    @cached_property
    def grid(self) -> np.ndarray:
        """Read-only (n, n) integer view."""
        g = np.array(self.entries, dtype=np.int64).reshape(self.order, self.order)
        g.setflags(write=False)
        return g

    def __repr__(self) -> str:
        return f"CayleyTable({self.order}, rows={[list(r) for r in self.rows()]})"


def make_table(order: int, entries: Iterable[int]) -> CayleyTable:
    """
    Validated table constructor.

    Raises:
        WrongLength: entries does not have order² items.
        EntryOutOfRange: an entry lies outside 0..order-1.
        OrderTooLarge: order exceeds the configured cap.

    Example:
        >>> make_table(2, [0, 1, 1, 0])   # Z2
    """
    if order < 1:
        raise WrongLength(f"order must be at least 1, got {order}")
    limit = _core.max_order()
    if order > limit:
        raise OrderTooLarge(order, limit, "make_table")
    values = tuple(entries)
    if len(values) != order * order:
        raise WrongLength(f"expected {order * order} entries, got {len(values)}")
    for idx, v in enumerate(values):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < order:
            raise EntryOutOfRange(
                f"entry {v!r} at ({idx // order}, {idx % order}) outside 0..{order - 1}"
            )
    return CayleyTable(order, tuple(int(v) for v in values))


def table_from_rows(rows: Sequence[Sequence[int]]) -> CayleyTable:
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise WrongLength(f"row {list(r)} does not have {n} entries")
    return make_table(n, [v for r in rows for v in r])


def _check_element(t: CayleyTable, a: Element) -> None:
    if not 0 <= a < t.order:
        raise EntryOutOfRange(f"element {a} outside 0..{t.order - 1}")


def _check_orders(t: CayleyTable, m: TotalMap) -> None:
    if t.order != m.order:
        raise OrderMismatch(f"table of order {t.order} with map of order {m.order}")


# ---------------------------------------------------------------------------
# Translations
# ---------------------------------------------------------------------------

def left_translation(t: CayleyTable, a: Element) -> TotalMap:
    """L_a: y ↦ a·y (row a)."""
    _check_element(t, a)
    n = t.order
    return TotalMap(t.entries[a * n:(a + 1) * n])


def right_translation(t: CayleyTable, a: Element) -> TotalMap:
    """R_a: y ↦ y·a (column a)."""
    _check_element(t, a)
    return TotalMap(t.entries[a::t.order])


def transpose(t: CayleyTable) -> CayleyTable:
    """The opposite groupoid x·'y = y·x."""
    return CayleyTable(t.order, tuple(int(v) for v in t.grid.T.ravel()))


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_left_quasigroup(t: CayleyTable) -> bool:
    return all(is_bijective(left_translation(t, a)) for a in range(t.order))


def is_right_quasigroup(t: CayleyTable) -> bool:
    return all(is_bijective(right_translation(t, a)) for a in range(t.order))


def is_quasigroup(t: CayleyTable) -> bool:
    return is_left_quasigroup(t) and is_right_quasigroup(t)


def is_latin_square(t: CayleyTable) -> bool:
    """Row and column check on the grid, independent of the translations."""
    ref = np.arange(t.order)
    g = t.grid
    return bool(
        (np.sort(g, axis=1) == ref).all() and (np.sort(g, axis=0) == ref[:, None]).all()
    )


def left_identity_elements(t: CayleyTable) -> List[Element]:
    """All e with e·x = x for every x."""
    ref = np.arange(t.order)
    return [e for e in range(t.order) if np.array_equal(t.grid[e, :], ref)]


def right_identity_elements(t: CayleyTable) -> List[Element]:
    """All e with x·e = x for every x."""
    ref = np.arange(t.order)
    return [e for e in range(t.order) if np.array_equal(t.grid[:, e], ref)]


def identity_element(t: CayleyTable) -> Optional[Element]:
    """The two-sided identity, if any. Two of them would coincide (e = e·f = f)."""
    right = set(right_identity_elements(t))
    for e in left_identity_elements(t):
        if e in right:
            return e
    return None


def is_automorphism(t: CayleyTable, m: TotalMap) -> bool:
    """m bijective and m(x·y) = m(x)·m(y) for all x, y."""
    if m.order != t.order or not is_bijective(m):
        return False
    sigma = np.array(m.image, dtype=np.int64)
    g = t.grid
    return bool(np.array_equal(sigma[g], g[np.ix_(sigma, sigma)]))


def relabel(t: CayleyTable, sigma: TotalMap) -> CayleyTable:
    """The isomorphic copy with sigma(x)·'sigma(y) = sigma(x·y)."""
    _check_orders(t, sigma)
    inv = np.array(invert(sigma).image, dtype=np.int64)
    sig = np.array(sigma.image, dtype=np.int64)
    moved = sig[t.grid][np.ix_(inv, inv)]
    return CayleyTable(t.order, tuple(int(v) for v in moved.ravel()))


def solve_right(t: CayleyTable, a: Element, b: Element) -> Element:
    """The unique y with y·a = b, as R_a⁻¹(b)."""
    _check_element(t, b)
    column = right_translation(t, a)
    if not is_bijective(column):
        raise NotBijective(f"R_{a} = {list(column.image)} is not a bijection")
    return invert(column)(b)
