"""Seeded random instance generators.

Every instance is drawn from its own ``random.Random`` seeded by
``(seed, kind, n, index)``, so instance ``i`` of a stream is the same no
matter how the stream is split between workers.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator
from typing import Any

from ..errors import InputError
from ..foundation import SetFamily, Universe
from ..nests import Nest
from ..relations import Relation
from ..topologies import Topology, topology_from_subbase
from .enumerate import _rows_transitive, linear_order_from_permutation

MAX_REJECTIONS = 1_000_000


def instance_rng(seed: int, kind: str, n: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{kind}:{n}:{index}")


def _chain_masks(perm: list[int], cuts: list[int]) -> list[int]:
    masks, acc, start = [], 0, 0
    for cut in cuts:
        for x in perm[start:cut]:
            acc |= 1 << x
        masks.append(acc)
        start = cut
    return masks


def _with_ends(u: Universe, masks: list[int], rng: random.Random) -> list[int]:
    if rng.random() < 0.5:
        masks = [0] + masks
    if rng.random() < 0.5:
        masks = masks + [u.full]
    return masks


def sample_nest(u: Universe, rng: random.Random) -> Nest:
    """Grow a chain by cutting a random permutation at a random set of positions."""
    perm = list(range(u.n))
    rng.shuffle(perm)
    cuts = [c for c in range(1, u.n) if rng.random() < 0.5]
    return Nest.from_masks(u, _with_ends(u, _chain_masks(perm, cuts), rng))


def sample_t0_nest(u: Universe, rng: random.Random) -> Nest:
    perm = list(range(u.n))
    rng.shuffle(perm)
    return Nest.from_masks(u, _with_ends(u, _chain_masks(perm, list(range(1, u.n))), rng))


def sample_nest_pair(u: Universe, rng: random.Random) -> tuple[Nest, Nest]:
    """Half independent pairs, half twins (complements of the left nest, possibly with one member dropped)."""
    left = sample_nest(u, rng)
    if rng.random() < 0.5:
        return left, sample_nest(u, rng)
    twin = list(left.complements().masks)
    if twin and rng.random() < 0.5:
        twin.pop(rng.randrange(len(twin)))
    return left, Nest.from_masks(u, twin)


def sample_twin_nest_pair(u: Universe, rng: random.Random) -> tuple[Nest, Nest]:
    """Two T0-separating nests inducing mutually opposite orders (a T1-separating union)."""
    perm = list(range(u.n))
    rng.shuffle(perm)
    cuts = list(range(1, u.n))
    left = _with_ends(u, _chain_masks(perm, cuts), rng)
    right = _with_ends(u, _chain_masks(perm[::-1], cuts), rng)
    return Nest.from_masks(u, left), Nest.from_masks(u, right)


def sample_transitive_relation(u: Universe, rng: random.Random) -> Relation:
    """Rejection sampling; each attempt draws its own edge density so sparse and dense relations both occur."""
    n = u.n
    for _ in range(MAX_REJECTIONS):
        p = rng.random()
        rows = tuple(
            sum(1 << y for y in range(n) if rng.random() < p) for _ in range(n)
        )
        if _rows_transitive(rows):
            return Relation(u, rows)
    raise RuntimeError(f"no transitive relation found after {MAX_REJECTIONS} attempts")


def sample_linear_order(u: Universe, rng: random.Random) -> Relation:
    perm = list(range(u.n))
    rng.shuffle(perm)
    return linear_order_from_permutation(u, tuple(perm))


def sample_subbase(u: Universe, rng: random.Random) -> SetFamily:
    k = rng.randint(0, 4)
    return SetFamily(u, tuple(rng.randrange(1 << u.n) for _ in range(k)))


def sample_topology(u: Universe, rng: random.Random) -> Topology:
    k = rng.randint(0, u.n + 2)
    return topology_from_subbase(SetFamily(u, tuple(rng.randrange(1 << u.n) for _ in range(k))))


SAMPLERS: dict[str, Callable[[Universe, random.Random], Any]] = {
    "nest": sample_nest,
    "t0_nest": sample_t0_nest,
    "nest_pair": sample_nest_pair,
    "twin_nest_pair": sample_twin_nest_pair,
    "transitive_relation": sample_transitive_relation,
    "linear_order": sample_linear_order,
    "subbase": sample_subbase,
    "topology": sample_topology,
}


def sample_one(kind: str, u: Universe, rng: random.Random):
    try:
        sampler = SAMPLERS[kind]
    except KeyError:
        raise InputError(f"unknown instance kind {kind!r}; expected one of {sorted(SAMPLERS)}") from None
    return sampler(u, rng)


def sample_instances(kind: str, u: Universe, count: int, seed: int) -> Iterator:
    if kind not in SAMPLERS:
        raise InputError(f"unknown instance kind {kind!r}; expected one of {sorted(SAMPLERS)}")
    for i in range(count):
        yield sample_one(kind, u, instance_rng(seed, kind, u.n, i))
