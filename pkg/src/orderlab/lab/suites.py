"""Theorem suites: per-instance predicates over nests, relations and topologies.

Each suite knows how to enumerate its instances exhaustively, how to sample
them, which instances it applies to, and how to evaluate one instance.  An
evaluation returns the list of violated predicates plus integer
observations (things that are reported but not asserted).
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from ..conditions import all_conditions, check_proposition1, check_theorem4
from ..errors import InputError
from ..foundation import SetFamily, Universe, default_labels, family_from_json, make_universe
from ..nests import (
    Nest,
    complement_lower_formula,
    complement_upper_formula,
    interlocking_via_minmax,
    is_interlocking,
    non_order_via_complement_formula,
    non_reflexive_order_via_complement_formula,
    order_from_nest,
    order_via_product_formula,
    ray_via_nest,
    reflexive_order_from_nest,
    t0_separates,
    t1_separates,
    theorem1_sides,
)
from ..relations import (
    Relation,
    down,
    is_antisymmetric,
    is_irreflexive,
    is_linear,
    is_reflexive,
    is_transitive,
    left_ray,
    reflexive_closure,
    relation_from_json,
    right_ray,
    up,
)
from ..topologies import (
    Topology,
    enumerate_topologies,
    interval_topology,
    is_discrete,
    order_topology,
    topology_from_subbase,
    topology_from_subbase_by_closure,
)
from . import enumerate as en

Failure = tuple[str, str]
Outcome = tuple[list[Failure], Counter]


# -- instance (de)serialization ---------------------------------------------------


def _nest_from_json(obj) -> Nest:
    return Nest(family_from_json(obj))


def _pair_to_json(pair: tuple[Nest, Nest]) -> dict[str, Any]:
    left, right = pair
    return {
        "universe": list(left.universe.labels),
        "left": left.family.label_lists(),
        "right": right.family.label_lists(),
    }


def _pair_from_json(obj) -> tuple[Nest, Nest]:
    if not isinstance(obj, dict) or set(obj) != {"universe", "left", "right"}:
        raise InputError('nest pair must have exactly the keys "universe", "left", "right"')
    left = _nest_from_json({"universe": obj["universe"], "sets": obj["left"]})
    right = _nest_from_json({"universe": obj["universe"], "sets": obj["right"]})
    return left, right


def _topology_from_json(obj) -> Topology:
    return Topology(family_from_json(obj))


CODECS: dict[str, tuple[Callable[[Any], Any], Callable[[Any], Any]]] = {
    "nest": (lambda x: x.to_json(), _nest_from_json),
    "nest_pair": (_pair_to_json, _pair_from_json),
    "relation": (lambda x: x.to_json(), relation_from_json),
    "family": (lambda x: x.to_json(), family_from_json),
    "topology": (lambda x: x.to_json(), _topology_from_json),
}


# -- suite record -------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    suite_id: str
    claim: str
    codec: str
    exhaustive: Callable[[Universe], Iterator[Any]]
    exhaustive_cap: int
    sampler: Optional[str]
    sampled_cap: int
    evaluate: Callable[[Any], Outcome]
    accept: Optional[Callable[[Any], bool]] = None

    def applies(self, instance) -> bool:
        return self.accept is None or self.accept(instance)

    def serialize(self, instance) -> dict[str, Any]:
        return CODECS[self.codec][0](instance)

    def deserialize(self, obj) -> Any:
        return CODECS[self.codec][1](obj)


def _universe(n: int) -> Universe:
    return make_universe(default_labels(n))


def _fail(failures: list[Failure], ok: bool, predicate: str, detail: str = "") -> None:
    if not ok:
        failures.append((predicate, detail))


# -- nest-order laws ------------------------------------------------------------------


def _eval_nestord(nest: Nest) -> Outcome:
    failures: list[Failure] = []
    obs: Counter = Counter()
    lt = order_from_nest(nest)
    _fail(failures, is_irreflexive(lt), "irreflexive", repr(lt))
    _fail(failures, is_antisymmetric(lt), "antisymmetric", repr(lt))
    _fail(failures, is_transitive(lt), "transitive", repr(lt))
    le = reflexive_order_from_nest(nest)
    _fail(failures, is_reflexive(le) and reflexive_closure(lt) == le, "reflexive_variant", repr(le))
    if t0_separates(nest).t0:
        obs["t0_nests"] += 1
        _fail(failures, is_linear(lt), "linear_when_t0", repr(lt))
    return failures, obs


def _eval_t1(pair: tuple[Nest, Nest]) -> Outcome:
    lhs, rhs = theorem1_sides(*pair)
    obs: Counter = Counter({f"lhs_{str(lhs).lower()}": 1})
    failures: list[Failure] = []
    _fail(failures, lhs == rhs, "biconditional", f"t1_union={lhs} twin_t0_opposite={rhs}")
    return failures, obs


def _is_t0(nest: Nest) -> bool:
    return t0_separates(nest).t0


def _eval_t2(nest: Nest) -> Outcome:
    inter = is_interlocking(nest)
    implies, either = interlocking_via_minmax(nest)
    failures: list[Failure] = []
    detail = f"interlocking={inter} max_implies_min={implies} no_max_or_min={either}"
    _fail(failures, inter == implies, "interlocking_iff_clause2", detail)
    _fail(failures, implies == either, "clause2_iff_clause3", detail)
    _fail(failures, inter == either, "interlocking_iff_clause3", detail)
    return failures, Counter({f"interlocking_{str(inter).lower()}": 1})


def _eval_l2(nest: Nest) -> Outcome:
    failures: list[Failure] = []
    lt = order_from_nest(nest)
    le = reflexive_order_from_nest(nest)
    _fail(failures, order_via_product_formula(nest) == lt, "order_as_product_union", repr(lt))
    _fail(failures, non_order_via_complement_formula(nest) == lt.complement(), "non_order_formula", repr(lt))
    _fail(
        failures,
        non_reflexive_order_via_complement_formula(nest) == le.complement(),
        "non_reflexive_order_formula",
        repr(le),
    )
    return failures, Counter()


def _eval_l3(nest: Nest) -> Outcome:
    """Upper formula against the reflexive reading, lower formula against the strict one.

    Those are the readings under which each formula holds; the four
    formula/reading match counts are reported for every nest.
    """
    failures: list[Failure] = []
    obs: Counter = Counter()
    t0 = _is_t0(nest)
    cls = "t0" if t0 else "non_t0"
    readings = {"strict": order_from_nest(nest), "reflexive": reflexive_order_from_nest(nest)}
    for x in nest.universe.labels:
        upper = complement_upper_formula(nest, x)
        lower = complement_lower_formula(nest, x)
        for name, rel in readings.items():
            up_ok = upper == up(rel, x).complement()
            low_ok = lower == down(rel, x).complement()
            obs[f"{cls}.upper.{name}.{'match' if up_ok else 'mismatch'}"] += 1
            obs[f"{cls}.lower.{name}.{'match' if low_ok else 'mismatch'}"] += 1
            if t0 and name == "reflexive":
                _fail(failures, up_ok, "upper_formula_reflexive_reading", f"x={x} formula={upper!r}")
            if t0 and name == "strict":
                _fail(failures, low_ok, "lower_formula_strict_reading", f"x={x} formula={lower!r}")
    return failures, obs


def _eval_l4(nest: Nest) -> Outcome:
    failures: list[Failure] = []
    lt = order_from_nest(nest)
    for a in nest.universe.labels:
        right = ray_via_nest(nest, a, "right")
        left = ray_via_nest(nest, a, "left")
        _fail(failures, right == right_ray(lt, a), "right_ray_formula", f"a={a} formula={right!r}")
        _fail(failures, left == left_ray(lt, a), "left_ray_formula", f"a={a} formula={left!r}")
    return failures, Counter()


def _eval_r1(nest: Nest) -> Outcome:
    failures: list[Failure] = []
    lt = order_from_nest(nest)
    le = reflexive_closure(lt)
    _fail(failures, interval_topology(le) == order_topology(lt), "interval_reflexive_equals_order_strict")
    _fail(failures, is_discrete(interval_topology(lt)), "interval_strict_is_discrete")
    _fail(failures, is_discrete(order_topology(le)), "order_reflexive_is_discrete")
    return failures, Counter()


def _t1_union(pair: tuple[Nest, Nest]) -> bool:
    left, right = pair
    return t1_separates(left.family.union(right.family)).t1


def _eval_l1(pair: tuple[Nest, Nest]) -> Outcome:
    left, right = pair
    failures: list[Failure] = []
    obs: Counter = Counter()
    lt = order_from_nest(left)
    le = reflexive_closure(lt)
    order_strict = order_topology(lt)
    interval_reflexive = interval_topology(le)
    generated = topology_from_subbase(left.family.union(right.family))
    interval_strict = interval_topology(lt)
    order_reflexive = order_topology(le)
    _fail(failures, order_strict == interval_reflexive, "order_strict_equals_interval_reflexive")
    _fail(failures, interval_reflexive.issubset(generated), "interval_reflexive_within_generated")
    _fail(failures, generated.issubset(interval_strict), "generated_within_interval_strict")
    _fail(failures, interval_strict == order_reflexive, "interval_strict_equals_order_reflexive")
    if is_interlocking(left) and is_interlocking(right):
        obs["both_interlocking"] += 1
        _fail(failures, order_strict == generated, "interlocking_generated_equals_order_strict")
    return failures, obs


def _eval_p1(r: Relation) -> Outcome:
    rep = check_proposition1(r)
    failures: list[Failure] = []
    detail = repr(rep.to_json())
    _fail(failures, rep.lower_agrees, "lower_equals_left_iff_c1_c3", detail)
    _fail(failures, rep.upper_agrees, "upper_equals_right_iff_c2_c4", detail)
    obs = Counter({
        f"lower_equals_left_{str(rep.lower_equals_left).lower()}": 1,
        f"upper_equals_right_{str(rep.upper_equals_right).lower()}": 1,
    })
    return failures, obs


def _eval_t4(r: Relation) -> Outcome:
    rep = check_theorem4(r)
    failures: list[Failure] = []
    _fail(failures, rep.implication_holds, "conditions_imply_equality", repr(rep.to_json()))
    obs: Counter = Counter()
    if rep.conditions_hold:
        obs["conditions_hold"] += 1
    if rep.converse_datum:
        obs["equality_without_all_conditions"] += 1
    return failures, obs


def _eval_r2(r: Relation) -> Outcome:
    verdicts = all_conditions(r)
    failures: list[Failure] = []
    _fail(failures, verdicts[0].holds, "condition1_on_linear_order", f"failing_pair={verdicts[0].failing_pair}")
    obs: Counter = Counter()
    for v in verdicts[1:]:
        obs[f"condition{v.condition}_{'holds' if v.holds else 'fails'}"] += 1
    return failures, obs


def _eval_mintop(s: SetFamily) -> Outcome:
    generated = topology_from_subbase(s)
    containing = [t for t in enumerate_topologies(s.universe) if set(s.masks) <= set(t.masks)]
    meet = set.intersection(*(set(t.masks) for t in containing))
    failures: list[Failure] = []
    _fail(failures, set(generated.masks) == meet, "equals_meet_of_containing_topologies", repr(generated))
    _fail(failures, topology_from_subbase_by_closure(s) == generated, "equals_literal_closure", repr(generated))
    return failures, Counter()


@lru_cache(maxsize=None)
def _characterizing_topologies(n: int) -> tuple[frozenset, frozenset, frozenset]:
    """Topologies (as mask sets) realised on n points by each finite characterization.

    go: interval topology of the reflexive order of some T0-separating nest;
    lots: the same with the nest required to be interlocking;
    twin: generated by a T1-separating union of two nests.
    """
    u = _universe(n)
    go, lots, twin = set(), set(), set()
    t0 = list(en.enumerate_t0_nests(u))
    for nest in t0:
        t = frozenset(interval_topology(reflexive_order_from_nest(nest)).masks)
        go.add(t)
        if is_interlocking(nest):
            lots.add(t)
    for left in t0:
        for right in t0:
            if _t1_union((left, right)):
                twin.add(frozenset(topology_from_subbase(left.family.union(right.family)).masks))
    return frozenset(go), frozenset(lots), frozenset(twin)


def _eval_t3fin(t: Topology) -> Outcome:
    go, lots, twin = _characterizing_topologies(t.universe.n)
    masks = frozenset(t.masks)
    disc = is_discrete(t)
    failures: list[Failure] = []
    _fail(failures, (masks in go) == disc, "t0_nest_interval_iff_discrete", repr(t))
    _fail(failures, (masks in lots) == disc, "interlocking_t0_nest_interval_iff_discrete", repr(t))
    _fail(failures, (masks in twin) == disc, "twin_nest_subbase_iff_discrete", repr(t))
    return failures, Counter({"discrete": int(disc)})


SUITES: dict[str, Suite] = {
    s.suite_id: s
    for s in [
        Suite("NESTORD", "nest-induced order is a strict order, linear when the nest is T0",
              "nest", en.enumerate_nests, 6, "nest", 16, _eval_nestord),
        Suite("T1", "union T1-separates iff both nests T0-separate with opposite orders",
              "nest_pair", en.enumerate_nest_pairs, 4, "nest_pair", 16, _eval_t1),
        Suite("T2", "interlocking and the two max/min clauses agree on T0-separating nests",
              "nest", en.enumerate_nests, 6, "t0_nest", 16, _eval_t2, accept=_is_t0),
        Suite("L2", "product and complement formulas for the nest-induced order",
              "nest", en.enumerate_nests, 5, "nest", 10, _eval_l2),
        Suite("L3", "closed forms for the complements of principal up- and down-sets",
              "nest", en.enumerate_nests, 6, "nest", 16, _eval_l3),
        Suite("L4", "closed forms for left and right rays",
              "nest", en.enumerate_nests, 6, "nest", 16, _eval_l4),
        Suite("R1", "interval and order topologies of a T0-separating nest's orders",
              "nest", en.enumerate_nests, 6, "t0_nest", 8, _eval_r1, accept=_is_t0),
        Suite("L1", "inclusion chains between the five topologies for twin nests",
              "nest_pair", en.enumerate_nest_pairs, 4, "twin_nest_pair", 8, _eval_l1, accept=_t1_union),
        Suite("P1", "lower/left and upper/right topology equalities iff the witness conditions",
              "relation", en.enumerate_transitive_relations, 4, "transitive_relation", 6, _eval_p1),
        Suite("T4", "all four conditions imply the interval topology equals the order topology",
              "relation", en.enumerate_transitive_relations, 4, "transitive_relation", 6, _eval_t4),
        Suite("R2", "every strict total order satisfies the first condition",
              "relation", en.enumerate_linear_orders, 7, "linear_order", 12, _eval_r2),
        Suite("MINTOP", "subbase closure equals the meet of all enumerated topologies containing it",
              "family", en.enumerate_subbases, 4, "subbase", 4, _eval_mintop),
        Suite("T3FIN", "a finite topology has a nest characterization iff it is discrete",
              "topology", enumerate_topologies, 4, "topology", 5, _eval_t3fin),
    ]
}


def get_suite(suite_id: str) -> Suite:
    try:
        return SUITES[suite_id]
    except KeyError:
        raise InputError(f"unknown suite {suite_id!r}; expected one of {sorted(SUITES)}") from None
