"""Finite topologies, generated from subbases and from relations.

A :class:`Topology` stores its complete family of open sets.  On a finite
universe a topology is determined by the minimal open neighbourhood of each
point, which is how :func:`topology_from_subbase` builds one; the literal
"finite intersections, then unions" closure is kept alongside as
:func:`topology_from_subbase_by_closure` for cross-checking.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from ._bits import bits, canonical_key
from .errors import InputError, SizeError
from .foundation import SetFamily, Subset, Universe
from .relations import Relation, down, left_ray, right_ray, up

TOPOLOGY_LIMIT = 12
ENUMERATION_LIMIT = 4


def _is_topology(masks: Iterable[int], full: int) -> bool:
    s = set(masks)
    if 0 not in s or full not in s:
        return False
    members = list(s)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a & b not in s or a | b not in s:
                return False
    return True


@dataclass(frozen=True)
class Topology:
    opens: SetFamily

    def __post_init__(self) -> None:
        if not _is_topology(self.opens.masks, self.opens.universe.full):
            raise InputError(f"{self.opens!r} is not a topology")

    @classmethod
    def _trusted(cls, u: Universe, masks: Iterable[int]) -> Topology:
        t = object.__new__(cls)
        object.__setattr__(t, "opens", SetFamily(u, tuple(masks)))
        return t

    @property
    def universe(self) -> Universe:
        return self.opens.universe

    @property
    def masks(self) -> tuple[int, ...]:
        return self.opens.masks

    def is_open(self, s: Subset) -> bool:
        return s in self.opens

    def __len__(self) -> int:
        return len(self.opens)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.opens)

    def issubset(self, other: Topology) -> bool:
        """Every open set of ``self`` is open in ``other`` (``self`` is coarser or equal)."""
        _same(self, other)
        return set(self.masks) <= set(other.masks)

    def to_json(self):
        return self.opens.to_json()

    def __repr__(self) -> str:
        return f"Topology{self.opens!r}"


def _same(t1: Topology, t2: Topology) -> None:
    if t1.universe != t2.universe:
        raise InputError("topologies live on different universes")


def _require_size(u: Universe) -> None:
    if u.n > TOPOLOGY_LIMIT:
        raise SizeError(f"topologies are stored explicitly; at most {TOPOLOGY_LIMIT} points supported")


def minimal_neighbourhoods(s: SetFamily) -> list[int]:
    """For each point, the meet of the subbase members containing it (the whole space if none)."""
    u = s.universe
    out = []
    for x in range(u.n):
        acc = u.full
        for m in s.masks:
            if m >> x & 1:
                acc &= m
        out.append(acc)
    return out


def topology_from_subbase(s: SetFamily) -> Topology:
    """The coarsest topology in which every member of ``s`` is open."""
    u = s.universe
    _require_size(u)
    nbhd = minimal_neighbourhoods(s)
    opens = [m for m in range(1 << u.n) if all(nbhd[x] & ~m == 0 for x in bits(m))]
    return Topology._trusted(u, opens)


def topology_from_subbase_by_closure(s: SetFamily) -> Topology:
    """Same result as :func:`topology_from_subbase`, by closing under meets and then joins."""
    u = s.universe
    _require_size(u)
    base = {u.full} | set(s.masks)
    frontier = set(base)
    while frontier:
        new = {a & b for a in frontier for b in base} - base
        base |= new
        frontier = new
    opens = {0} | base
    frontier = set(opens)
    while frontier:
        new = {a | b for a in frontier for b in opens} - opens
        opens |= new
        frontier = new
    return Topology._trusted(u, opens)


def upper_topology(r: Relation) -> Topology:
    u = r.universe
    return topology_from_subbase(SetFamily(u, tuple(down(r, x).complement().mask for x in range(u.n))))


def lower_topology(r: Relation) -> Topology:
    u = r.universe
    return topology_from_subbase(SetFamily(u, tuple(up(r, x).complement().mask for x in range(u.n))))


def join(t1: Topology, t2: Topology) -> Topology:
    _same(t1, t2)
    return topology_from_subbase(t1.opens.union(t2.opens))


def interval_topology(r: Relation) -> Topology:
    return join(upper_topology(r), lower_topology(r))


def left_topology(r: Relation) -> Topology:
    u = r.universe
    return topology_from_subbase(SetFamily(u, tuple(left_ray(r, a).mask for a in range(u.n))))


def right_topology(r: Relation) -> Topology:
    u = r.universe
    return topology_from_subbase(SetFamily(u, tuple(right_ray(r, a).mask for a in range(u.n))))


def order_topology(r: Relation) -> Topology:
    return join(left_topology(r), right_topology(r))


def indiscrete(u: Universe) -> Topology:
    return Topology._trusted(u, {0, u.full})


def discrete(u: Universe) -> Topology:
    _require_size(u)
    return Topology._trusted(u, range(1 << u.n))


def is_discrete(t: Topology) -> bool:
    opens = set(t.masks)
    return all(1 << x in opens for x in range(t.universe.n))


class Comparison(enum.Enum):
    EQUAL = "Equal"
    STRICTLY_FINER = "StrictlyFiner"
    STRICTLY_COARSER = "StrictlyCoarser"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class ComparisonResult:
    tag: Comparison
    witness: Optional[Subset] = None


def compare(t1: Topology, t2: Topology) -> ComparisonResult:
    """How ``t1`` relates to ``t2``; any witness is an open set of exactly one of them."""
    _same(t1, t2)
    a, b = set(t1.masks), set(t2.masks)
    u = t1.universe
    only1 = [m for m in t1.masks if m not in b]
    only2 = [m for m in t2.masks if m not in a]
    if not only1 and not only2:
        return ComparisonResult(Comparison.EQUAL)
    if only1 and not only2:
        return ComparisonResult(Comparison.STRICTLY_FINER, Subset(u, only1[0]))
    if only2 and not only1:
        return ComparisonResult(Comparison.STRICTLY_COARSER, Subset(u, only2[0]))
    return ComparisonResult(Comparison.INCOMPARABLE, Subset(u, only1[0]))


@lru_cache(maxsize=None)
def _topology_masks(n: int) -> tuple[tuple[int, ...], ...]:
    full = (1 << n) - 1
    inner = [m for m in range(1, full)]
    found = []
    for k in range(len(inner) + 1):
        for extra in combinations(inner, k):
            fam = {0, full, *extra}
            if _is_topology(fam, full):
                found.append(fam)
    found.sort(key=lambda fam: (len(fam), sorted(canonical_key(m, n) for m in fam)))
    return tuple(tuple(f) for f in found)


def enumerate_topologies(u: Universe) -> Iterator[Topology]:
    """Every topology on ``u`` exactly once, by generate-and-filter over families containing 0 and X."""
    if u.n > ENUMERATION_LIMIT:
        raise SizeError(f"topology enumeration supports at most {ENUMERATION_LIMIT} points, got {u.n}")
    for masks in _topology_masks(u.n):
        yield Topology._trusted(u, masks)
