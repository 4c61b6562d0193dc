"""Open-ended searches for instances of claims that are not proved.

A search scans its instance space in order of increasing universe size and
lists every instance it finds.  Finding nothing only means nothing exists in
the scanned range.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from typing import Any, Optional

from ..conditions import all_conditions, check_theorem4
from ..errors import InputError, SizeError
from ..nests import (
    Nest,
    complement_lower_formula,
    complement_upper_formula,
    order_from_nest,
    reflexive_order_from_nest,
    t0_separates,
)
from ..relations import Relation, down, up
from . import enumerate as en
from .runner import SuiteReport
from .suites import _universe


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    cap: int
    instances: Callable[[Any], Iterator[Any]]
    probe: Callable[[Any], Optional[str]]  # returns a detail string when the instance is a finding


def _t4_converse(r: Relation) -> Optional[str]:
    rep = check_theorem4(r)
    if not rep.converse_datum:
        return None
    failing = [v.condition for v in all_conditions(r) if not v.holds]
    return f"interval(<=) == order(<) while conditions {failing} fail"


def _non_t0_nests(u) -> Iterator[Nest]:
    for nest in en.enumerate_nests(u):
        if not t0_separates(nest).t0:
            yield nest


def _l3_general(nest: Nest) -> Optional[str]:
    lt = order_from_nest(nest)
    le = reflexive_order_from_nest(nest)
    bad = []
    for x in nest.universe.labels:
        if complement_upper_formula(nest, x) != up(le, x).complement():
            bad.append(f"upper@{x}")
        if complement_lower_formula(nest, x) != down(lt, x).complement():
            bad.append(f"lower@{x}")
    return ", ".join(bad) if bad else None


def _nonempty_witness(r: Relation) -> Optional[str]:
    loose = all_conditions(r)
    strict = all_conditions(r, nonempty_witness=True)
    changed = [a.condition for a, b in zip(loose, strict) if a.holds != b.holds]
    if not changed:
        return None
    return f"conditions {changed} hold only with an empty witness set"


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("T4-converse", "interval(<=) equals order(<) although some condition fails",
              en.RELATION_CAP, en.enumerate_transitive_relations, _t4_converse),
        Claim("L3-general", "a non-T0 nest breaks a complement closed form under its matching reading",
              en.NEST_CAP, _non_t0_nests, _l3_general),
        Claim("COND-nonempty", "a condition's verdict depends on admitting an empty witness set",
              en.RELATION_CAP, en.enumerate_transitive_relations, _nonempty_witness),
    ]
}


def search_counterexample(claim_id: str, max_n: int, budget: Optional[float] = None) -> SuiteReport:
    """Scan n = 0..max_n; ``budget`` is wall-clock seconds (None for unlimited)."""
    try:
        claim = CLAIMS[claim_id]
    except KeyError:
        raise InputError(f"unknown claim {claim_id!r}; expected one of {sorted(CLAIMS)}") from None
    if max_n < 0 or max_n > claim.cap:
        raise SizeError(f"claim {claim_id} searches universes of 0..{claim.cap} elements, got {max_n}")
    if budget is not None and budget < 0:
        raise InputError("budget must be non-negative")
    start = time.perf_counter()
    findings: list[dict[str, Any]] = []
    per_n: Counter = Counter()
    status = "exhausted"
    index = 0
    if budget == 0:
        status = "budget-spent"
    else:
        for n in range(max_n + 1):
            for inst in claim.instances(_universe(n)):
                if budget is not None and time.perf_counter() - start > budget:
                    status = "budget-spent"
                    break
                per_n[n] += 1
                detail = claim.probe(inst)
                if detail is not None:
                    findings.append({"instance": inst.to_json(), "predicate": claim_id, "detail": detail,
                                     "index": index, "n": n})
                index += 1
            if status == "budget-spent":
                break
    if findings and status == "exhausted":
        status = "found"
    return SuiteReport(
        suite_id=claim_id,
        config={"claim_id": claim_id, "max_n": max_n, "budget": budget},
        instances_checked=sum(per_n.values()),
        failures=findings,
        failure_count=len(findings),
        observations={},
        per_n={str(n): per_n[n] for n in sorted(per_n)},
        wall_time_ms=(time.perf_counter() - start) * 1000,
        status=status,
        extra={"description": claim.description},
    )
