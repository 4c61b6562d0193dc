"""Nests, separating families, nest-induced orders and interlocking.

A nest is a family of subsets that is totally ordered by inclusion.  A nest
``L`` induces the strict order ``x < y  iff  some L contains x but not y``
and its reflexive variant.  The closed-form descriptions of that order, its
complement, the principal up/down complements and the two rays are also
evaluated here literally as set expressions, so they can be compared against
the direct definitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Literal, Optional

from ._bits import bits
from .errors import HypothesisNotMetError, InputError, NotANestError
from .foundation import Element, SetFamily, Subset, Universe
from .relations import Relation, reflexive_closure


def is_nest(f: SetFamily | Nest) -> bool:
    masks = _family(f).masks
    # canonical order sorts by cardinality, so a chain must be increasing along it
    return all(a & ~b == 0 for a, b in zip(masks, masks[1:]))


@dataclass(frozen=True)
class Nest:
    family: SetFamily

    def __post_init__(self) -> None:
        if not is_nest(self.family):
            raise NotANestError(f"family {self.family!r} is not totally ordered by inclusion")

    @classmethod
    def from_masks(cls, u: Universe, masks) -> Nest:
        return cls(SetFamily(u, tuple(masks)))

    @property
    def universe(self) -> Universe:
        return self.family.universe

    @property
    def masks(self) -> tuple[int, ...]:
        return self.family.masks

    def __len__(self) -> int:
        return len(self.family)

    def __iter__(self):
        return iter(self.family)

    def complements(self) -> Nest:
        full = self.universe.full
        return Nest.from_masks(self.universe, (full & ~m for m in self.masks))

    def to_json(self):
        return self.family.to_json()

    def __repr__(self) -> str:
        return f"Nest{self.family!r}"


def _family(f: SetFamily | Nest) -> SetFamily:
    return f.family if isinstance(f, Nest) else f


# -- separation ---------------------------------------------------------------


@dataclass(frozen=True)
class SeparationReport:
    t0: bool
    t1: bool
    query: Literal["t0", "t1"]
    failing_pair: Optional[tuple[str, str]] = None

    @property
    def holds(self) -> bool:
        return self.t0 if self.query == "t0" else self.t1

    def __bool__(self) -> bool:
        return self.holds


def _t0_failure(masks: tuple[int, ...], n: int) -> Optional[tuple[int, int]]:
    for x in range(n):
        for y in range(x + 1, n):
            bx, by = 1 << x, 1 << y
            if not any(bool(m & bx) != bool(m & by) for m in masks):
                return x, y
    return None


def _t1_failure(masks: tuple[int, ...], n: int) -> Optional[tuple[int, int]]:
    # ordered pair (x, y) with no member containing x but not y
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            bx, by = 1 << x, 1 << y
            if not any(m & bx and not m & by for m in masks):
                return x, y
    return None


def _labels(u: Universe, pair: Optional[tuple[int, int]]) -> Optional[tuple[str, str]]:
    if pair is None:
        return None
    return u.labels[pair[0]], u.labels[pair[1]]


def t0_separates(f: SetFamily | Nest) -> SeparationReport:
    fam = _family(f)
    u = fam.universe
    f0 = _t0_failure(fam.masks, u.n)
    t1 = f0 is None and _t1_failure(fam.masks, u.n) is None
    return SeparationReport(t0=f0 is None, t1=t1, query="t0", failing_pair=_labels(u, f0))


def t1_separates(f: SetFamily | Nest) -> SeparationReport:
    fam = _family(f)
    u = fam.universe
    f1 = _t1_failure(fam.masks, u.n)
    t0 = f1 is None or _t0_failure(fam.masks, u.n) is None
    return SeparationReport(t0=t0, t1=f1 is None, query="t1", failing_pair=_labels(u, f1))


# -- induced orders -----------------------------------------------------------


def order_from_nest(n: Nest) -> Relation:
    """Strict order: x < y iff some member contains x and omits y."""
    u = n.universe
    full = u.full
    rows = [0] * u.n
    for m in n.masks:
        outside = full & ~m
        for x in bits(m):
            rows[x] |= outside
    return Relation(u, tuple(rows))


def reflexive_order_from_nest(n: Nest) -> Relation:
    return reflexive_closure(order_from_nest(n))


def _pairs_relation(u: Universe, pairs) -> Relation:
    return Relation.from_pairs(u, pairs)


def order_via_product_formula(n: Nest) -> Relation:
    """The order as a union of Cartesian products ``L x (X - L)`` over the nest."""
    u = n.universe
    pairs: set[tuple[str, str]] = set()
    for s in n:
        pairs |= set(product(s.labels, s.complement().labels))
    return _pairs_relation(u, pairs)


def non_order_via_complement_formula(n: Nest) -> Relation:
    """``X*X`` minus the order, as the intersection of ``((X-L) x X) u (X x L)`` over the nest.

    The empty intersection is all of ``X*X``.
    """
    u = n.universe
    everything = set(product(u.labels, u.labels))
    acc = set(everything)
    for s in n:
        outside = s.complement().labels
        acc &= set(product(outside, u.labels)) | set(product(u.labels, s.labels))
    return _pairs_relation(u, acc)


def non_reflexive_order_via_complement_formula(n: Nest) -> Relation:
    """The complement of the reflexive order: the previous intersection with the diagonal removed."""
    u = n.universe
    off_diagonal = {(x, y) for x, y in product(u.labels, u.labels) if x != y}
    acc = set(non_order_via_complement_formula(n).pairs()) & off_diagonal
    return _pairs_relation(u, acc)


# -- closed forms for principal complements and rays ----------------------------


def _meet(masks, full: int) -> int:
    acc = full
    for m in masks:
        acc &= m
    return acc


def _join(masks) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def complement_upper_formula(n: Nest, x: Element) -> Subset:
    """``meet{L : x in L} - {x}``; the empty meet is the whole universe."""
    u = n.universe
    bx = 1 << u.index(x)
    return Subset(u, _meet((m for m in n.masks if m & bx), u.full) & ~bx)


def complement_lower_formula(n: Nest, x: Element) -> Subset:
    """``meet{X - L : x in X - L} | {x}``; the empty meet is the whole universe."""
    u = n.universe
    full = u.full
    bx = 1 << u.index(x)
    outsides = (full & ~m for m in n.masks)
    return Subset(u, _meet((c for c in outsides if c & bx), full) | bx)


def members_containing(n: Nest, a: Element) -> tuple[int, ...]:
    """Masks of the members that contain ``a`` (the family usually written L_a)."""
    ba = 1 << n.universe.index(a)
    return tuple(m for m in n.masks if m & ba)


def ray_via_nest(n: Nest, a: Element, direction: Literal["left", "right"]) -> Subset:
    u = n.universe
    containing = set(members_containing(n, a))
    if direction == "right":
        return Subset(u, _join(u.full & ~m for m in containing))
    if direction == "left":
        return Subset(u, _join(m for m in n.masks if m not in containing))
    raise InputError(f"direction must be 'left' or 'right', got {direction!r}")


# -- interlocking ---------------------------------------------------------------


def is_interlocking(f: SetFamily | Nest) -> bool:
    """Every member equal to the meet of its strict supersets equals the join of its strict subsets.

    Works for arbitrary families.  Empty meets are the whole universe and
    empty joins are empty.
    """
    fam = _family(f)
    full = fam.universe.full
    masks = fam.masks
    for m in masks:
        above = [o for o in masks if o != m and m & ~o == 0]
        if _meet(above, full) != m:
            continue
        below = [o for o in masks if o != m and o & ~m == 0]
        if _join(below) != m:
            return False
    return True


def _has_maximal(r: Relation, s: int) -> bool:
    return any(r.rows[m] & s == 0 for m in bits(s))


def _has_minimal(r: Relation, s: int) -> bool:
    rows = r.rows
    for m in bits(s):
        if not any(rows[t] >> m & 1 for t in bits(s)):
            return True
    return False


def interlocking_via_minmax(n: Nest) -> tuple[bool, bool]:
    """Truth values of the two max/min characterizations of interlocking.

    First: for each member L, if L has a maximal element then its complement
    has a minimal one.  Second: for each L, either L has no maximal element or
    its complement has a minimal one.  Requires a T0-separating nest.
    """
    sep = t0_separates(n)
    if not sep.t0:
        raise HypothesisNotMetError(f"nest is not T0-separating (fails at {sep.failing_pair})")
    r = order_from_nest(n)
    full = n.universe.full
    implies = True
    either = True
    for m in n.masks:
        has_max = _has_maximal(r, m)
        has_min_out = _has_minimal(r, full & ~m)
        if has_max and not has_min_out:
            implies = False
        if not (not has_max or has_min_out):
            either = False
    return implies, either


# -- twin nests -----------------------------------------------------------------


def theorem1_sides(l: Nest, r: Nest) -> tuple[bool, bool]:
    """(union T1-separates, both T0-separate and the orders are mutually opposite)."""
    if l.universe != r.universe:
        raise InputError("nests belong to different universes")
    lhs = t1_separates(l.family.union(r.family)).t1
    rhs = (
        t0_separates(l).t0
        and t0_separates(r).t0
        and order_from_nest(l) == order_from_nest(r).transpose()
    )
    return lhs, rhs


def check_theorem1(l: Nest, r: Nest) -> bool:
    lhs, rhs = theorem1_sides(l, r)
    return lhs == rhs

