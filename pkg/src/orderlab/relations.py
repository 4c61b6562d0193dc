"""Binary relations on a finite universe.

A :class:`Relation` is an n x n boolean matrix stored row-wise as bitmasks:
``rows[x]`` has bit ``y`` set iff ``x r y``.  Whether the relation is read as
strict (``<``) or reflexive (``<=``) is up to the caller; nothing here adds
or removes the diagonal implicitly.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from ._bits import bits
from .foundation import (
    Element,
    Subset,
    Universe,
    _check_keys,
    default_labels,
    make_universe,
    universe_from_json,
)
from .errors import InputError


@dataclass(frozen=True)
class Relation:
    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.universe.n
        if len(self.rows) != n:
            raise InputError(f"relation has {len(self.rows)} rows for a universe of size {n}")
        full = self.universe.full
        for row in self.rows:
            if row < 0 or row > full:
                raise InputError("relation row does not fit the universe")

    @classmethod
    def from_pairs(cls, u: Universe, pairs: Iterable[tuple[Element, Element]]) -> Relation:
        rows = [0] * u.n
        for x, y in pairs:
            rows[u.index(x)] |= 1 << u.index(y)
        return cls(u, tuple(rows))

    @classmethod
    def empty(cls, u: Universe) -> Relation:
        return cls(u, (0,) * u.n)

    def holds(self, x: Element, y: Element) -> bool:
        return bool(self.rows[self.universe.index(x)] >> self.universe.index(y) & 1)

    def index_pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rows) for y in bits(row)]

    def pairs(self) -> list[tuple[str, str]]:
        lab = self.universe.labels
        return [(lab[x], lab[y]) for x, y in self.index_pairs()]

    def transpose(self) -> Relation:
        n = self.universe.n
        cols = [0] * n
        for x, row in enumerate(self.rows):
            for y in bits(row):
                cols[y] |= 1 << x
        return Relation(self.universe, tuple(cols))

    def complement(self) -> Relation:
        full = self.universe.full
        return Relation(self.universe, tuple(full & ~row for row in self.rows))

    def __or__(self, other: Relation) -> Relation:
        self._same(other)
        return Relation(self.universe, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: Relation) -> Relation:
        self._same(other)
        return Relation(self.universe, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: Relation) -> Relation:
        self._same(other)
        return Relation(self.universe, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: Relation) -> bool:
        self._same(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def _same(self, other: Relation) -> None:
        if other.universe != self.universe:
            raise InputError("relations belong to different universes")

    def to_json(self) -> dict[str, Any]:
        return {"universe": list(self.universe.labels), "pairs": [list(p) for p in self.pairs()]}

    def __repr__(self) -> str:
        return "Relation{" + ", ".join(f"{x}<{y}" for x, y in self.pairs()) + "}"


def diagonal(u: Universe) -> Relation:
    return Relation(u, tuple(1 << i for i in range(u.n)))


def is_transitive(r: Relation) -> bool:
    rows = r.rows
    for row in rows:
        for y in bits(row):
            if rows[y] & ~row:
                return False
    return True


def is_reflexive(r: Relation) -> bool:
    return all(row >> i & 1 for i, row in enumerate(r.rows))


def is_irreflexive(r: Relation) -> bool:
    return not any(row >> i & 1 for i, row in enumerate(r.rows))


def is_antisymmetric(r: Relation) -> bool:
    rows = r.rows
    for x, row in enumerate(rows):
        for y in bits(row):
            if y != x and rows[y] >> x & 1:
                return False
    return True


def is_linear(r: Relation) -> bool:
    """Strict total order: transitive, irreflexive, antisymmetric, and total on distinct pairs."""
    if not (is_transitive(r) and is_irreflexive(r) and is_antisymmetric(r)):
        return False
    rows = r.rows
    n = r.universe.n
    for x in range(n):
        for y in range(x + 1, n):
            if not (rows[x] >> y & 1 or rows[y] >> x & 1):
                return False
    return True


def reflexive_closure(r: Relation) -> Relation:
    return Relation(r.universe, tuple(row | 1 << i for i, row in enumerate(r.rows)))


def up_set(r: Relation, a: Subset) -> Subset:
    """Elements strictly above some member of ``a`` in the sense of ``r`` as given."""
    out = 0
    for y in bits(a.mask):
        out |= r.rows[y]
    return Subset(r.universe, out)


def down_set(r: Relation, a: Subset) -> Subset:
    rows = r.rows
    out = 0
    for x, row in enumerate(rows):
        if row & a.mask:
            out |= 1 << x
    return Subset(r.universe, out)


def up(r: Relation, x: Element) -> Subset:
    return up_set(r, r.universe.singleton(x))


def down(r: Relation, x: Element) -> Subset:
    return down_set(r, r.universe.singleton(x))


def left_ray(r: Relation, a: Element) -> Subset:
    """``(<-, a) = {x : x r a}``, read off the column of ``a``."""
    j = r.universe.index(a)
    m = 0
    for x, row in enumerate(r.rows):
        if row >> j & 1:
            m |= 1 << x
    return Subset(r.universe, m)


def right_ray(r: Relation, a: Element) -> Subset:
    return Subset(r.universe, r.rows[r.universe.index(a)])


def slice(r: Relation, x: Element) -> Subset:  # noqa: A001 - named after U(x)
    """Row ``x`` of the matrix: ``{y : (x, y) in r}``."""
    return Subset(r.universe, r.rows[r.universe.index(x)])


def relation_from_json(obj: Mapping[str, Any]) -> Relation:
    """Parse ``{"universe": [...], "pairs": [["a", "b"], ...]}``; unknown keys are rejected."""
    _check_keys(obj, {"universe", "pairs"}, {"universe", "pairs"})
    u = universe_from_json(obj["universe"])
    pairs = obj["pairs"]
    if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise InputError('"pairs" must be a list of [x, y] label pairs')
    return Relation.from_pairs(u, [tuple(p) for p in pairs])


def relation_to_matrix_text(r: Relation) -> str:
    n = r.universe.n
    return "".join("".join("1" if row >> y & 1 else "0" for y in range(n)) + "\n" for row in r.rows)


def relation_from_matrix_text(text: str, u: Universe | None = None) -> Relation:
    """Parse one 0/1 row per line.  Without ``u``, elements are labelled a, b, c, ..."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    n = len(lines)
    if u is None:
        u = make_universe(default_labels(n))
    if u.n != n:
        raise InputError(f"matrix has {n} rows for a universe of size {u.n}")
    rows = []
    for ln in lines:
        if len(ln) != n or set(ln) - {"0", "1"}:
            raise InputError(f"bad matrix row {ln!r}: expected {n} characters of 0/1")
        rows.append(sum(1 << y for y, ch in enumerate(ln) if ch == "1"))
    return Relation(u, tuple(rows))
