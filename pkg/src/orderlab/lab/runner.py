"""Run a suite over its instance stream and aggregate a deterministic report.

Instances are numbered by their position in the raw stream (before the
suite's applicability filter).  Worker ``k`` of ``J`` evaluates the
positions congruent to ``k`` mod ``J``; results are merged by position, so
the report does not depend on the worker count.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Literal, Optional

from ..errors import InputError, SizeError
from .sampling import MAX_REJECTIONS, instance_rng, sample_one
from .suites import Suite, _universe, get_suite

MAX_STORED_FAILURES = 200
SEED_LIMIT = 1 << 64

DEFECT_NOTE = (
    "these are proved statements; a failure points to an implementation or "
    "interpretation defect, not a refutation"
)


@dataclass(frozen=True)
class SuiteSpec:
    suite_id: str
    max_n: int
    mode: Literal["exhaustive", "sampled"] = "exhaustive"
    samples: int = 0
    seed: int = 0
    min_n: Optional[int] = None

    def validate(self) -> Suite:
        suite = get_suite(self.suite_id)
        if self.mode not in ("exhaustive", "sampled"):
            raise InputError(f"mode must be exhaustive or sampled, got {self.mode!r}")
        if not 0 <= self.seed < SEED_LIMIT:
            raise InputError("seed must be a 64-bit unsigned value")
        lo = self.lower_n
        if lo < 0 or lo > self.max_n:
            raise InputError(f"need 0 <= min_n <= max_n, got min_n={lo} max_n={self.max_n}")
        if self.mode == "exhaustive":
            if self.max_n > suite.exhaustive_cap:
                raise SizeError(
                    f"suite {suite.suite_id} runs exhaustively up to n={suite.exhaustive_cap}, got {self.max_n}"
                )
        else:
            if self.samples < 1:
                raise InputError("sampled mode needs samples >= 1")
            if self.max_n > suite.sampled_cap:
                raise SizeError(f"suite {suite.suite_id} samples up to n={suite.sampled_cap}, got {self.max_n}")
        return suite

    @property
    def lower_n(self) -> int:
        if self.min_n is not None:
            return self.min_n
        return 0 if self.mode == "exhaustive" else self.max_n

    def config(self) -> dict[str, Any]:
        out = asdict(self)
        out["min_n"] = self.lower_n
        return out


@dataclass
class SuiteReport:
    suite_id: str
    config: dict[str, Any]
    instances_checked: int
    failures: list[dict[str, Any]]
    failure_count: int
    observations: dict[str, int]
    per_n: dict[str, int]
    wall_time_ms: Optional[float] = None
    status: str = ""
    note: Optional[str] = None
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_dict(self, include_timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite_id": self.suite_id,
            "config": self.config,
            "status": self.status or ("pass" if self.passed else "fail"),
            "instances_checked": self.instances_checked,
            "per_n": self.per_n,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "observations": self.observations,
        }
        if self.note:
            out["note"] = self.note
        out.update(self.extra)
        out["wall_time_ms"] = round(self.wall_time_ms, 3) if include_timing and self.wall_time_ms is not None else None
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2) + "\n"


def _raw_stream(spec: SuiteSpec, suite: Suite):
    """Yield (n, instance) in stream order; sampled positions yield their n and index only."""
    if spec.mode == "exhaustive":
        for n in range(spec.lower_n, spec.max_n + 1):
            u = _universe(n)
            for inst in suite.exhaustive(u):
                yield n, inst
    else:
        span = spec.max_n - spec.lower_n + 1
        for i in range(spec.samples):
            yield spec.lower_n + i % span, None


def _draw(spec: SuiteSpec, suite: Suite, n: int, index: int):
    u = _universe(n)
    rng = instance_rng(spec.seed, suite.sampler or "", n, index)
    for _ in range(MAX_REJECTIONS):
        inst = sample_one(suite.sampler, u, rng)
        if suite.applies(inst):
            return inst
    raise RuntimeError(f"suite {suite.suite_id}: sampler never produced an applicable instance")


def _run_shard(spec: SuiteSpec, shard: int, jobs: int):
    suite = get_suite(spec.suite_id)
    failures: list[tuple[int, int, dict[str, Any]]] = []
    obs: Counter = Counter()
    per_n: Counter = Counter()
    for index, (n, inst) in enumerate(_raw_stream(spec, suite)):
        if index % jobs != shard:
            continue
        if inst is None:
            inst = _draw(spec, suite, n, index)
        elif not suite.applies(inst):
            continue
        per_n[n] += 1
        found, seen = suite.evaluate(inst)
        obs.update(seen)
        for predicate, detail in found:
            failures.append((index, n, {"instance": suite.serialize(inst), "predicate": predicate, "detail": detail}))
    return failures, obs, per_n


def run_suite(spec: SuiteSpec, jobs: int = 1) -> SuiteReport:
    suite = spec.validate()
    if jobs < 1:
        raise InputError("jobs must be >= 1")
    start = time.perf_counter()
    if jobs == 1:
        shards = [_run_shard(spec, 0, 1)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            shards = list(pool.map(_run_shard, [spec] * jobs, range(jobs), [jobs] * jobs))
    failures: list[tuple[int, int, dict[str, Any]]] = []
    obs: Counter = Counter()
    per_n: Counter = Counter()
    for f, o, p in shards:
        failures.extend(f)
        obs.update(o)
        per_n.update(p)
    failures.sort(key=lambda item: item[0])
    stored = [dict(rec, index=index, n=n) for index, n, rec in failures[:MAX_STORED_FAILURES]]
    elapsed = (time.perf_counter() - start) * 1000
    return SuiteReport(
        suite_id=suite.suite_id,
        config=spec.config(),
        instances_checked=sum(per_n.values()),
        failures=stored,
        failure_count=len(failures),
        observations={k: obs[k] for k in sorted(obs)},
        per_n={str(n): per_n[n] for n in sorted(per_n)},
        wall_time_ms=elapsed,
        note=DEFECT_NOTE if failures else None,
    )


def evaluate_instance(suite_id: str, instance: dict[str, Any]) -> list[tuple[str, str]]:
    """Deserialize one instance and return the predicates it violates."""
    suite = get_suite(suite_id)
    inst = suite.deserialize(instance)
    found, _ = suite.evaluate(inst)
    return found


def replay_failure(suite_id: str, failure: dict[str, Any]) -> bool:
    """True iff the recorded failure's predicate still fails on its serialized instance."""
    return any(pred == failure["predicate"] for pred, _ in evaluate_instance(suite_id, failure["instance"]))
