"""Finite universes, their subsets, and families of subsets.

Every construction in the package lives over a :class:`Universe`, a finite
ordered list of labels.  Elements are addressed by their position in that
list; subsets are stored as bitmasks (bit ``i`` set iff element ``i`` is a
member) and exposed as characteristic vectors.  All values are immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Any, Union

from ._bits import bits, canonical_key, full_mask, popcount
from .errors import InputError, SizeError

MAX_UNIVERSE = 64
EXHAUSTIVE_LIMIT = 6

Element = Union[str, int]


@dataclass(frozen=True)
class Universe:
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for lab in self.labels:
            if lab in seen:
                raise InputError(f"duplicate label {lab!r}")
            seen.add(lab)
        if len(self.labels) > MAX_UNIVERSE:
            raise SizeError(f"universe has {len(self.labels)} elements; at most {MAX_UNIVERSE} supported")
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def index(self, x: Element) -> int:
        """Position of an element given either by label or by index."""
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < self.n:
                return x
            raise InputError(f"element index {x} out of range for universe of size {self.n}")
        try:
            return self._index[x]  # type: ignore[attr-defined]
        except KeyError:
            raise InputError(f"unknown label {x!r}") from None

    def mask_of(self, labels: Iterable[Element]) -> int:
        m = 0
        for x in labels:
            m |= 1 << self.index(x)
        return m

    def subset(self, labels: Iterable[Element] = ()) -> Subset:
        return Subset(self, self.mask_of(labels))

    def empty(self) -> Subset:
        return Subset(self, 0)

    def whole(self) -> Subset:
        return Subset(self, self.full)

    def singleton(self, x: Element) -> Subset:
        return Subset(self, 1 << self.index(x))

    def all_subsets(self) -> Iterator[Subset]:
        for m in range(1 << self.n):
            yield Subset(self, m)

    def require_exhaustive(self, cap: int = EXHAUSTIVE_LIMIT, what: str = "this operation") -> None:
        if self.n > cap:
            raise SizeError(f"{what} supports universes of at most {cap} elements, got {self.n}")


def make_universe(labels: Iterable[str]) -> Universe:
    labels = tuple(labels)
    for lab in labels:
        if not isinstance(lab, str):
            raise InputError(f"labels must be strings, got {lab!r}")
    return Universe(labels)


def default_labels(n: int) -> list[str]:
    """``a, b, c, ...`` for small n, ``x0, x1, ...`` beyond 26."""
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i}" for i in range(n)]


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.universe.full:
            raise InputError(f"mask {self.mask:#x} does not fit a universe of size {self.universe.n}")

    @property
    def vector(self) -> tuple[bool, ...]:
        return tuple(bool(self.mask >> i & 1) for i in range(self.universe.n))

    @property
    def labels(self) -> list[str]:
        return [self.universe.labels[i] for i in bits(self.mask)]

    def __len__(self) -> int:
        return popcount(self.mask)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, x: Element) -> bool:
        return bool(self.mask >> self.universe.index(x) & 1)

    def _other(self, other: Subset) -> int:
        if other.universe != self.universe:
            raise InputError("subsets belong to different universes")
        return other.mask

    def complement(self) -> Subset:
        return Subset(self.universe, self.universe.full & ~self.mask)

    def __or__(self, other: Subset) -> Subset:
        return Subset(self.universe, self.mask | self._other(other))

    def __and__(self, other: Subset) -> Subset:
        return Subset(self.universe, self.mask & self._other(other))

    def __sub__(self, other: Subset) -> Subset:
        return Subset(self.universe, self.mask & ~self._other(other))

    def issubset(self, other: Subset) -> bool:
        return self.mask & ~self._other(other) == 0

    def __le__(self, other: Subset) -> bool:
        return self.issubset(other)

    def __lt__(self, other: Subset) -> bool:
        return self.issubset(other) and self.mask != other.mask

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class SetFamily:
    """A duplicate-free family of subsets, stored in canonical order.

    Canonical order sorts members by cardinality, then lexicographically on
    their characteristic vectors, so two families with the same members are
    equal and serialize identically.
    """

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        full = self.universe.full
        for m in self.masks:
            if m < 0 or m > full:
                raise InputError(f"mask {m:#x} does not fit a universe of size {self.universe.n}")
        n = self.universe.n
        canon = tuple(sorted(set(self.masks), key=lambda m: canonical_key(m, n)))
        object.__setattr__(self, "masks", canon)

    @classmethod
    def of(cls, universe: Universe, subsets: Iterable[Subset]) -> SetFamily:
        masks = []
        for s in subsets:
            if s.universe != universe:
                raise InputError("member belongs to a different universe")
            masks.append(s.mask)
        return cls(universe, tuple(masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Subset]:
        return (Subset(self.universe, m) for m in self.masks)

    def __contains__(self, s: Subset) -> bool:
        return s.universe == self.universe and s.mask in self.masks

    def union(self, other: SetFamily) -> SetFamily:
        if other.universe != self.universe:
            raise InputError("families belong to different universes")
        return SetFamily(self.universe, self.masks + other.masks)

    def label_lists(self) -> list[list[str]]:
        return [Subset(self.universe, m).labels for m in self.masks]

    def to_json(self) -> dict[str, Any]:
        return {"universe": list(self.universe.labels), "sets": self.label_lists()}

    def __repr__(self) -> str:
        return "{" + ", ".join(repr(s) for s in self) + "}"


def canonical(family: SetFamily) -> SetFamily:
    return SetFamily(family.universe, family.masks)


def family_from_label_lists(u: Universe, lists: Iterable[Iterable[Element]]) -> SetFamily:
    return SetFamily(u, tuple(u.mask_of(lst) for lst in lists))


def _check_keys(obj: Mapping[str, Any], allowed: set[str], required: set[str]) -> None:
    if not isinstance(obj, Mapping):
        raise InputError("expected a JSON object")
    extra = set(obj) - allowed
    if extra:
        raise InputError(f"unknown keys: {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise InputError(f"missing keys: {sorted(missing)}")


def universe_from_json(labels: Any) -> Universe:
    if not isinstance(labels, list):
        raise InputError('"universe" must be a list of labels')
    return make_universe(labels)


def family_from_json(obj: Mapping[str, Any]) -> SetFamily:
    """Parse ``{"universe": [...], "sets": [[...], ...]}``; unknown keys are rejected."""
    _check_keys(obj, {"universe", "sets"}, {"universe", "sets"})
    u = universe_from_json(obj["universe"])
    sets = obj["sets"]
    if not isinstance(sets, list) or not all(isinstance(s, list) for s in sets):
        raise InputError('"sets" must be a list of label lists')
    return family_from_label_lists(u, sets)
