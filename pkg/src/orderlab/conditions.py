"""Four witness conditions on a transitive relation and the topology equalities they control.

Throughout, ``r`` is a transitive relation read as strict ``<`` and ``<=`` is
its reflexive closure.  Each condition has the shape

    for every pair (x, y) passing a guard, there is a finite set Z with
    (1) every z in Z related to y in a prescribed way, and
    (2) every w related to all of Z in a prescribed way satisfies a conclusion.

Enlarging Z only shrinks the set of w that clause (2) constrains, so a
witness exists iff the largest Z allowed by clause (1) works.  That maximal
candidate is what gets recorded as the witness.

Z may be empty.  With Z empty, clause (2) constrains every w; this is the
empty intersection of rays, i.e. the whole space as a basic open set.  Pass
``nonempty_witness=True`` to require Z to be nonempty instead.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import PreconditionError
from .relations import Relation, is_transitive, reflexive_closure
from .topologies import (
    interval_topology,
    left_topology,
    lower_topology,
    order_topology,
    right_topology,
    upper_topology,
)

Pred = Callable[[int, int], bool]


@dataclass(frozen=True)
class ConditionVerdict:
    condition: int
    holds: bool
    failing_pair: Optional[tuple[str, str]] = None
    witness_sets: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "failing_pair": list(self.failing_pair) if self.failing_pair else None,
            "witnesses": [
                {"pair": list(pair), "z": zs} for pair, zs in self.witness_sets.items()
            ],
        }


@dataclass(frozen=True)
class _Shape:
    guard: Callable[[Pred, Pred, int, int], bool]
    candidate: Callable[[Pred, Pred, int, int, int], bool]  # (lt, le, x, y, z)
    hypothesis: Callable[[Pred, Pred, int, int], bool]  # (lt, le, w, z)
    conclusion: Callable[[Pred, Pred, int, int, int], bool]  # (lt, le, x, y, w)


_SHAPES = {
    1: _Shape(
        guard=lambda lt, le, x, y: not le(x, y),
        candidate=lambda lt, le, x, y, z: lt(y, z),
        hypothesis=lambda lt, le, w, z: lt(w, z),
        conclusion=lambda lt, le, x, y, w: not le(x, w),
    ),
    2: _Shape(
        guard=lambda lt, le, x, y: not le(y, x),
        candidate=lambda lt, le, x, y, z: lt(z, y),
        hypothesis=lambda lt, le, w, z: lt(z, w),
        conclusion=lambda lt, le, x, y, w: not le(w, x),
    ),
    3: _Shape(
        guard=lambda lt, le, x, y: lt(y, x),
        candidate=lambda lt, le, x, y, z: not le(z, y),
        hypothesis=lambda lt, le, w, z: not le(z, w),
        conclusion=lambda lt, le, x, y, w: lt(w, x),
    ),
    4: _Shape(
        guard=lambda lt, le, x, y: lt(x, y),
        candidate=lambda lt, le, x, y, z: not le(y, z),
        hypothesis=lambda lt, le, w, z: not le(w, z),
        conclusion=lambda lt, le, x, y, w: lt(x, w),
    ),
}


def _predicates(r: Relation) -> tuple[Pred, Pred]:
    lt_rows = r.rows
    le_rows = reflexive_closure(r).rows
    return (lambda a, b: bool(lt_rows[a] >> b & 1)), (lambda a, b: bool(le_rows[a] >> b & 1))


def _require_transitive(r: Relation) -> None:
    if not is_transitive(r):
        raise PreconditionError("conditions are defined for transitive relations only")


def witness_works(r: Relation, k: int, x: int, y: int, zs: list[int]) -> bool:
    """Whether ``zs`` satisfies both clauses of condition ``k`` for the pair (x, y)."""
    shape = _SHAPES[k]
    lt, le = _predicates(r)
    if not all(shape.candidate(lt, le, x, y, z) for z in zs):
        return False
    for w in range(r.universe.n):
        if all(shape.hypothesis(lt, le, w, z) for z in zs) and not shape.conclusion(lt, le, x, y, w):
            return False
    return True


def guarded_pairs(r: Relation, k: int) -> list[tuple[int, int]]:
    shape = _SHAPES[k]
    lt, le = _predicates(r)
    n = r.universe.n
    return [(x, y) for x in range(n) for y in range(n) if shape.guard(lt, le, x, y)]


def maximal_candidate(r: Relation, k: int, x: int, y: int) -> list[int]:
    shape = _SHAPES[k]
    lt, le = _predicates(r)
    return [z for z in range(r.universe.n) if shape.candidate(lt, le, x, y, z)]


def evaluate_condition(r: Relation, k: int, *, nonempty_witness: bool = False) -> ConditionVerdict:
    if k not in _SHAPES:
        raise ValueError(f"there are four conditions, got {k}")
    _require_transitive(r)
    lab = r.universe.labels
    witnesses: dict[tuple[str, str], list[str]] = {}
    for x, y in guarded_pairs(r, k):
        zs = maximal_candidate(r, k, x, y)
        if (nonempty_witness and not zs) or not witness_works(r, k, x, y, zs):
            return ConditionVerdict(k, False, (lab[x], lab[y]), witnesses)
        witnesses[(lab[x], lab[y])] = [lab[z] for z in zs]
    return ConditionVerdict(k, True, None, witnesses)


def condition1(r: Relation, **kw) -> ConditionVerdict:
    return evaluate_condition(r, 1, **kw)


def condition2(r: Relation, **kw) -> ConditionVerdict:
    return evaluate_condition(r, 2, **kw)


def condition3(r: Relation, **kw) -> ConditionVerdict:
    return evaluate_condition(r, 3, **kw)


def condition4(r: Relation, **kw) -> ConditionVerdict:
    return evaluate_condition(r, 4, **kw)


def all_conditions(r: Relation, **kw) -> list[ConditionVerdict]:
    return [evaluate_condition(r, k, **kw) for k in (1, 2, 3, 4)]


@dataclass(frozen=True)
class Proposition1Report:
    conditions: tuple[bool, bool, bool, bool]
    lower_equals_left: bool
    upper_equals_right: bool

    @property
    def lower_agrees(self) -> bool:
        c1, _, c3, _ = self.conditions
        return self.lower_equals_left == (c1 and c3)

    @property
    def upper_agrees(self) -> bool:
        _, c2, _, c4 = self.conditions
        return self.upper_equals_right == (c2 and c4)

    @property
    def agrees(self) -> bool:
        return self.lower_agrees and self.upper_agrees

    def to_json(self) -> dict[str, Any]:
        return {
            "conditions": list(self.conditions),
            "lower_equals_left": self.lower_equals_left,
            "upper_equals_right": self.upper_equals_right,
            "lower_agrees": self.lower_agrees,
            "upper_agrees": self.upper_agrees,
        }


def check_proposition1(r: Relation, **kw) -> Proposition1Report:
    """Compare lower(<=) with the left-ray topology and upper(<=) with the right-ray topology."""
    verdicts = tuple(v.holds for v in all_conditions(r, **kw))
    le = reflexive_closure(r)
    return Proposition1Report(
        conditions=verdicts,  # type: ignore[arg-type]
        lower_equals_left=lower_topology(le) == left_topology(r),
        upper_equals_right=upper_topology(le) == right_topology(r),
    )


@dataclass(frozen=True)
class Theorem4Report:
    conditions_hold: bool
    topologies_equal: bool

    @property
    def implication_holds(self) -> bool:
        return not self.conditions_hold or self.topologies_equal

    @property
    def converse_datum(self) -> bool:
        """Interval topology equals the order topology although some condition fails."""
        return self.topologies_equal and not self.conditions_hold

    def to_json(self) -> dict[str, Any]:
        return {
            "conditions_hold": self.conditions_hold,
            "topologies_equal": self.topologies_equal,
            "implication_holds": self.implication_holds,
            "converse_datum": self.converse_datum,
        }


def check_theorem4(r: Relation, **kw) -> Theorem4Report:
    holds = all(v.holds for v in all_conditions(r, **kw))
    return Theorem4Report(holds, interval_topology(reflexive_closure(r)) == order_topology(r))
