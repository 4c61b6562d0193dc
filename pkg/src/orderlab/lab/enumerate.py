"""Exhaustive instance generators.  Every generator is duplicate-free and deterministic."""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, permutations

from .._bits import bits, canonical_key
from ..errors import SizeError
from ..foundation import SetFamily, Universe
from ..nests import Nest, t0_separates
from ..relations import Relation

NEST_CAP = 6
RELATION_CAP = 4
LINEAR_CAP = 7
SUBBASE_CAP = 4
SUBBASE_MAX_SETS = 4


def _cap(u: Universe, cap: int, what: str) -> None:
    if u.n > cap:
        raise SizeError(f"{what} supports universes of at most {cap} elements, got {u.n}")


@lru_cache(maxsize=None)
def _proper_chains(n: int) -> tuple[tuple[int, ...], ...]:
    full = (1 << n) - 1
    inner = sorted(range(1, full), key=lambda m: canonical_key(m, n))
    out: list[tuple[int, ...]] = []

    def grow(chain: tuple[int, ...], last: int) -> None:
        out.append(chain)
        for m in inner:
            if m != last and last & ~m == 0:
                grow(chain + (m,), m)

    grow((), 0)
    return tuple(out)


def _variants(chain: tuple[int, ...], full: int) -> Iterator[tuple[int, ...]]:
    yield chain
    yield (0,) + chain
    if full:
        yield chain + (full,)
        yield (0,) + chain + (full,)


def enumerate_nests(u: Universe) -> Iterator[Nest]:
    """Every chain in the subset lattice of ``u``, with and without the empty set and the whole set."""
    _cap(u, NEST_CAP, "nest enumeration")
    for chain in _proper_chains(u.n):
        for masks in _variants(chain, u.full):
            yield Nest.from_masks(u, masks)


def enumerate_t0_nests(u: Universe) -> Iterator[Nest]:
    for nest in enumerate_nests(u):
        if t0_separates(nest).t0:
            yield nest


def enumerate_nest_pairs(u: Universe) -> Iterator[tuple[Nest, Nest]]:
    nests = list(enumerate_nests(u))
    for left in nests:
        for right in nests:
            yield left, right


@lru_cache(maxsize=None)
def _transitive_rows(n: int) -> tuple[tuple[int, ...], ...]:
    width = (1 << n) - 1
    found = []
    for code in range(1 << (n * n)):
        rows = tuple(code >> (i * n) & width for i in range(n))
        if _rows_transitive(rows):
            found.append(rows)
    return tuple(found)


def _rows_transitive(rows: tuple[int, ...]) -> bool:
    for row in rows:
        for y in bits(row):
            if rows[y] & ~row:
                return False
    return True


def enumerate_transitive_relations(u: Universe) -> Iterator[Relation]:
    """Generate all ``2**(n*n)`` matrices and keep the transitive ones."""
    _cap(u, RELATION_CAP, "transitive-relation enumeration")
    for rows in _transitive_rows(u.n):
        yield Relation(u, rows)


def linear_order_from_permutation(u: Universe, perm: tuple[int, ...]) -> Relation:
    rows = [0] * u.n
    for i, x in enumerate(perm):
        for y in perm[i + 1:]:
            rows[x] |= 1 << y
    return Relation(u, tuple(rows))


def enumerate_linear_orders(u: Universe) -> Iterator[Relation]:
    _cap(u, LINEAR_CAP, "linear-order enumeration")
    for perm in permutations(range(u.n)):
        yield linear_order_from_permutation(u, perm)


def enumerate_subbases(u: Universe, max_sets: int = SUBBASE_MAX_SETS) -> Iterator[SetFamily]:
    """All families of at most ``max_sets`` distinct subsets of ``u``."""
    _cap(u, SUBBASE_CAP, "subbase enumeration")
    subsets = sorted(range(1 << u.n), key=lambda m: canonical_key(m, u.n))
    for k in range(max_sets + 1):
        for combo in combinations(subsets, k):
            yield SetFamily(u, combo)
