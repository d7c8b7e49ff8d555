"""
Crossed-inverse identities on Cayley tables.

    left CI    (x·y)·J_r(x) = y
    right CI   J_l(x)·(y·x) = y
    middle     x·(y·J(x)) = y       (the companion form for loops)
    translation form  R_{J_r x} L_x = ε

J is taken as a plain TotalMap: bijectivity is something the checks
conclude, never something they assume.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, NamedTuple, Optional

from . import _core
from ._api import log_check
from ._errors import AmbiguousJ, EntryOutOfRange, NotALoop, OrderMismatch, PreconditionViolated
from ._table import (
    CayleyTable,
    Element,
    TotalMap,
    compose,
    identity_element,
    identity_map,
    invert,
    is_automorphism,
    is_bijective,
    is_left_quasigroup,
    is_right_quasigroup,
    left_translation,
    right_translation,
)


class Classification(str, Enum):
    NOT_LEFT_CI = "NOT_LEFT_CI"
    CI_QUASIGROUP = "CI_QUASIGROUP"
    CI_LOOP = "CI_LOOP"


def _check_orders(t: CayleyTable, j: TotalMap) -> None:
    if t.order != j.order:
        raise OrderMismatch(f"table of order {t.order} with map of order {j.order}")


# ---------------------------------------------------------------------------
# Identity checkers
# ---------------------------------------------------------------------------

def check_left_ci(t: CayleyTable, j: TotalMap) -> bool:
    """(x·y)·j(x) = y for all x, y."""
    _check_orders(t, j)
    n, e, ji = t.order, t.entries, j.image
    for x in range(n):
        z = ji[x]
        row = x * n
        for y in range(n):
            if e[e[row + y] * n + z] != y:
                return False
    return True


def check_right_ci(t: CayleyTable, j: TotalMap) -> bool:
    """j(x)·(y·x) = y for all x, y."""
    _check_orders(t, j)
    n, e, ji = t.order, t.entries, j.image
    for x in range(n):
        row = ji[x] * n
        for y in range(n):
            if e[row + e[y * n + x]] != y:
                return False
    return True


def check_left_ci_middle(t: CayleyTable, j: TotalMap) -> bool:
    """x·(y·j(x)) = y for all x, y."""
    _check_orders(t, j)
    n, e, ji = t.order, t.entries, j.image
    for x in range(n):
        z = ji[x]
        row = x * n
        for y in range(n):
            if e[row + e[y * n + z]] != y:
                return False
    return True


def check_ci_groupoid(t: CayleyTable, jr: TotalMap, jl: TotalMap) -> bool:
    return check_left_ci(t, jr) and check_right_ci(t, jl)


def translation_form_holds(t: CayleyTable, j: TotalMap, x: Element) -> bool:
    """R_{j(x)} ∘ L_x = ε."""
    _check_orders(t, j)
    if not 0 <= x < t.order:
        raise EntryOutOfRange(f"element {x} outside 0..{t.order - 1}")
    r = right_translation(t, j(x))
    return compose(r, left_translation(t, x)) == identity_map(t.order)


def translation_correspondence(t: CayleyTable, j: TotalMap) -> bool:
    """
    x ↦ L_x is injective and every R_{j(x)} inverts L_x, i.e. the
    correspondences Q ↔ {L_x} ↔ {R_{j(x)}} are bijections.
    """
    n = t.order
    if not all(translation_form_holds(t, j, x) for x in range(n)):
        return False
    return len(set(t.rows())) == n


# ---------------------------------------------------------------------------
# Derivation of J
# ---------------------------------------------------------------------------

def _right_candidates(t: CayleyTable, x: Element) -> List[Element]:
    n, e = t.order, t.entries
    row = x * n
    return [
        z for z in range(n)
        if all(e[e[row + y] * n + z] == y for y in range(n))
    ]


def _left_candidates(t: CayleyTable, x: Element) -> List[Element]:
    n, e = t.order, t.entries
    return [
        w for w in range(n)
        if all(e[w * n + e[y * n + x]] == y for y in range(n))
    ]


def _derive(
    t: CayleyTable,
    candidates: Callable[[CayleyTable, Element], List[Element]],
    side: str,
) -> Optional[TotalMap]:
    per_element = [candidates(t, x) for x in range(t.order)]
    ambiguous = [x for x, c in enumerate(per_element) if len(c) > 1]
    if any(not c for c in per_element):
        log_check(
            not ambiguous,
            "several J candidates on a table without J",
            side=side, elements=ambiguous,
        )
        return None
    if ambiguous:
        x = ambiguous[0]
        raise AmbiguousJ(x, per_element[x])
    return TotalMap(tuple(c[0] for c in per_element))


def derive_right_j(t: CayleyTable) -> Optional[TotalMap]:
    """
    The map J_r with (x·y)·J_r(x) = y, or None when no such map exists.

    Raises:
        AmbiguousJ: J_r exists but is not unique. J is unique on every
            quasigroup, so this indicates a bug rather than a property of
            the input.
    """
    return _derive(t, _right_candidates, "right")


def derive_left_j(t: CayleyTable) -> Optional[TotalMap]:
    """The map J_l with J_l(x)·(y·x) = y, or None. Same contract as derive_right_j."""
    return _derive(t, _left_candidates, "left")


def solve_left(t: CayleyTable, j: TotalMap, a: Element, b: Element) -> Element:
    """
    The unique x with a·x = b in a left CI-groupoid: x = b·j(a).

    The left CI precondition is only verified when debug checks are on.
    """
    if _core.debug_checks() and not check_left_ci(t, j):
        raise PreconditionViolated("solve_left needs a map satisfying the left CI identity")
    return t.entry(b, j(a))


# ---------------------------------------------------------------------------
# CI-loops
# ---------------------------------------------------------------------------

class CiLoopFlags(NamedTuple):
    x_times_jx_is_identity: bool
    j_is_automorphism: bool


def ci_loop_report(t: CayleyTable, j: TotalMap) -> CiLoopFlags:
    """x·j(x) = 1 for all x, and whether j is an automorphism of the loop."""
    _check_orders(t, j)
    e = identity_element(t)
    if e is None:
        raise NotALoop("table has no two-sided identity element")
    if _core.debug_checks() and not check_left_ci(t, j):
        raise PreconditionViolated("ci_loop_report needs a map satisfying the left CI identity")
    inverse_property = all(t.entry(x, j(x)) == e for x in range(t.order))
    return CiLoopFlags(inverse_property, is_automorphism(t, j))


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CiReport:
    order: int
    classification: Classification
    is_left_quasigroup: bool
    is_right_quasigroup: bool
    is_quasigroup: bool
    jr: Optional[TotalMap]
    jl: Optional[TotalMap]
    jr_is_bijective: bool
    jl_equals_jr_inverse: bool
    loop_identity: Optional[Element]
    x_times_jx_is_identity: bool
    j_is_automorphism: bool
    is_right_ci: bool
    is_ci_groupoid: bool
    middle_ci_holds: bool

    @property
    def is_loop(self) -> bool:
        return self.is_quasigroup and self.loop_identity is not None


def classify(t: CayleyTable) -> CiReport:
    """
    Classification certificate for one table.

    Structural flags are filled even when the table has no J_r.

    Example:
        >>> classify(make_table(3, [0, 1, 2, 1, 2, 0, 2, 0, 1])).classification
        <Classification.CI_LOOP: 'CI_LOOP'>
    """
    jr = derive_right_j(t)
    jl = derive_left_j(t)
    left_q = is_left_quasigroup(t)
    right_q = is_right_quasigroup(t)
    quasigroup = left_q and right_q
    unit = identity_element(t) if quasigroup else None

    jr_bijective = jr is not None and is_bijective(jr)
    jl_inverse = jr_bijective and jl is not None and jl == invert(jr)

    classification = Classification.NOT_LEFT_CI
    inverse_property = automorphism = middle = False
    if jr is not None:
        log_check(
            quasigroup and jr_bijective,
            "left CI table that is not a quasigroup with bijective J",
            order=t.order, entries=list(t.entries), jr=list(jr.image),
        )
        if quasigroup and jr_bijective:
            classification = Classification.CI_QUASIGROUP
            if unit is not None:
                classification = Classification.CI_LOOP
                inverse_property, automorphism = ci_loop_report(t, jr)
                middle = check_left_ci_middle(t, jr)

    return CiReport(
        order=t.order,
        classification=classification,
        is_left_quasigroup=left_q,
        is_right_quasigroup=right_q,
        is_quasigroup=quasigroup,
        jr=jr,
        jl=jl,
        jr_is_bijective=jr_bijective,
        jl_equals_jr_inverse=jl_inverse,
        loop_identity=unit,
        x_times_jx_is_identity=inverse_property,
        j_is_automorphism=automorphism,
        is_right_ci=jl is not None,
        is_ci_groupoid=jr is not None and jl is not None,
        middle_ci_holds=middle,
    )
