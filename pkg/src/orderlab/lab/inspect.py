"""Evaluate a single instance and collect every derived object, for ``check`` and ``demo``."""

from __future__ import annotations

from typing import Any

from ..conditions import all_conditions, check_proposition1, check_theorem4
from ..errors import InputError
from ..foundation import SetFamily, make_universe
from ..nests import (
    Nest,
    complement_lower_formula,
    complement_upper_formula,
    interlocking_via_minmax,
    is_interlocking,
    is_nest,
    order_from_nest,
    order_via_product_formula,
    ray_via_nest,
    reflexive_order_from_nest,
    t0_separates,
    t1_separates,
)
from ..relations import (
    Relation,
    down,
    is_antisymmetric,
    is_linear,
    is_reflexive,
    is_transitive,
    left_ray,
    reflexive_closure,
    right_ray,
    up,
)
from ..topologies import (
    interval_topology,
    is_discrete,
    left_topology,
    lower_topology,
    order_topology,
    right_topology,
    topology_from_subbase,
    upper_topology,
)

QUERIES = ("nest", "t0", "t1", "interlocking", "order", "topologies", "conditions")


def _sets(family) -> list[list[str]]:
    return [s.labels for s in family]


def _rel(r: Relation) -> list[list[str]]:
    return [list(p) for p in r.pairs()]


def relation_summary(r: Relation) -> dict[str, Any]:
    return {
        "pairs": _rel(r),
        "transitive": is_transitive(r),
        "reflexive": is_reflexive(r),
        "antisymmetric": is_antisymmetric(r),
        "linear": is_linear(r),
        "up": {x: up(r, x).labels for x in r.universe.labels},
        "down": {x: down(r, x).labels for x in r.universe.labels},
        "left_ray": {x: left_ray(r, x).labels for x in r.universe.labels},
        "right_ray": {x: right_ray(r, x).labels for x in r.universe.labels},
    }


def topology_summary(r: Relation) -> dict[str, Any]:
    out = {}
    for name, fn in [
        ("upper", upper_topology),
        ("lower", lower_topology),
        ("interval", interval_topology),
        ("left", left_topology),
        ("right", right_topology),
        ("order", order_topology),
    ]:
        t = fn(r)
        out[name] = {"opens": _sets(t), "discrete": is_discrete(t)}
    return out


def conditions_summary(r: Relation) -> dict[str, Any]:
    if not is_transitive(r):
        raise InputError("conditions need a transitive relation")
    return {
        "verdicts": [v.to_json() for v in all_conditions(r)],
        "proposition1": check_proposition1(r).to_json(),
        "theorem4": check_theorem4(r).to_json(),
    }


def _as_nest(family: SetFamily) -> Nest:
    if not is_nest(family):
        raise InputError(f"query needs a nest, but {family!r} is not totally ordered by inclusion")
    return Nest(family)


def _nest_orders(nest: Nest) -> dict[str, Any]:
    lt = order_from_nest(nest)
    labels = nest.universe.labels
    return {
        "strict_order": _rel(lt),
        "reflexive_order": _rel(reflexive_order_from_nest(nest)),
        "product_formula_agrees": order_via_product_formula(nest) == lt,
        "rays_via_nest": {
            x: {"left": ray_via_nest(nest, x, "left").labels, "right": ray_via_nest(nest, x, "right").labels}
            for x in labels
        },
        "complement_upper_formula": {x: complement_upper_formula(nest, x).labels for x in labels},
        "complement_lower_formula": {x: complement_lower_formula(nest, x).labels for x in labels},
    }


def check_family(family: SetFamily, query: str) -> dict[str, Any]:
    out: dict[str, Any] = {"universe": list(family.universe.labels), "sets": _sets(family)}
    if query == "nest":
        out["is_nest"] = is_nest(family)
        if out["is_nest"]:
            out.update(_nest_orders(Nest(family)))
    elif query in ("t0", "t1"):
        rep = t0_separates(family) if query == "t0" else t1_separates(family)
        out.update({"t0": rep.t0, "t1": rep.t1, "failing_pair": list(rep.failing_pair) if rep.failing_pair else None})
    elif query == "interlocking":
        out["interlocking"] = is_interlocking(family)
        if is_nest(family) and t0_separates(family).t0:
            implies, either = interlocking_via_minmax(Nest(family))
            out["max_implies_min"] = implies
            out["no_max_or_min"] = either
    elif query == "order":
        out.update(_nest_orders(_as_nest(family)))
    elif query == "topologies":
        out["generated"] = _sets(topology_from_subbase(family))
        if is_nest(family):
            lt = order_from_nest(Nest(family))
            out["strict"] = topology_summary(lt)
            out["reflexive"] = topology_summary(reflexive_closure(lt))
    elif query == "conditions":
        out.update(conditions_summary(order_from_nest(_as_nest(family))))
    else:
        raise InputError(f"unknown query {query!r}; expected one of {QUERIES}")
    return out


def check_relation(r: Relation, query: str) -> dict[str, Any]:
    out: dict[str, Any] = {"universe": list(r.universe.labels)}
    if query == "order":
        out.update(relation_summary(r))
    elif query == "topologies":
        out["pairs"] = _rel(r)
        out["strict"] = topology_summary(r)
        out["reflexive"] = topology_summary(reflexive_closure(r))
    elif query == "conditions":
        out["pairs"] = _rel(r)
        out.update(conditions_summary(r))
    elif query in QUERIES:
        raise InputError(f"query {query!r} needs a family input ({{'universe', 'sets'}})")
    else:
        raise InputError(f"unknown query {query!r}; expected one of {QUERIES}")
    return out


def demo_relation(name: str) -> Relation:
    u = make_universe(["a", "b", "c"])
    if name == "chain":
        return Relation.from_pairs(u, [("a", "b"), ("b", "c"), ("a", "c")])
    if name == "antichain":
        return Relation.empty(u)
    if name == "vee":
        return Relation.from_pairs(u, [("a", "c"), ("b", "c")])
    raise InputError(f"unknown demo {name!r}; expected chain, antichain or vee")


def demo(name: str) -> dict[str, Any]:
    r = demo_relation(name)
    return {
        "demo": name,
        "universe": list(r.universe.labels),
        "relation": relation_summary(r),
        "topologies_strict": topology_summary(r),
        "topologies_reflexive": topology_summary(reflexive_closure(r)),
        "conditions": conditions_summary(r),
    }
