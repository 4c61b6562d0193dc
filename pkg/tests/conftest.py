from __future__ import annotations

import pytest
from hypothesis import strategies as st

from orderlab.foundation import Universe, default_labels, family_from_label_lists, make_universe
from orderlab.nests import Nest
from orderlab.relations import Relation

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def abc() -> Universe:
    return make_universe(["a", "b", "c"])


@pytest.fixture
def ab() -> Universe:
    return make_universe(["a", "b"])


def nest(u: Universe, *sets) -> Nest:
    return Nest(family_from_label_lists(u, sets))


def universe(n: int) -> Universe:
    return make_universe(default_labels(n))


@st.composite
def relations(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return Relation(universe(n), tuple(rows))


@st.composite
def subsets_of(draw, u: Universe):
    return u.subset(draw(st.sets(st.sampled_from(u.labels))) if u.n else ())


@st.composite
def nests(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    u = universe(n)
    perm = draw(st.permutations(range(n)))
    cuts = sorted(draw(st.sets(st.integers(0, n))))
    masks, acc, start = [], 0, 0
    for cut in cuts:
        for x in perm[start:cut]:
            acc |= 1 << x
        masks.append(acc)
        start = cut
    return Nest.from_masks(u, masks)
