from itertools import product

import pytest
from hypothesis import given

from orderlab.errors import InputError
from orderlab.relations import (
    Relation,
    diagonal,
    down,
    down_set,
    is_antisymmetric,
    is_linear,
    is_reflexive,
    is_transitive,
    left_ray,
    reflexive_closure,
    relation_from_json,
    relation_from_matrix_text,
    relation_to_matrix_text,
    right_ray,
    slice,
    up,
    up_set,
)

from conftest import relations, subsets_of, universe
from oracles import is_transitive_pairs


@pytest.fixture
def chain(abc):
    return Relation.from_pairs(abc, [("a", "b"), ("b", "c"), ("a", "c")])


def test_predicates_on_examples(abc, ab, chain):
    assert is_transitive(chain) and is_linear(chain)
    empty = Relation.empty(ab)
    assert is_transitive(empty) and not is_linear(empty)
    cyc = Relation.from_pairs(ab, [("a", "b"), ("b", "a")])
    assert not is_antisymmetric(cyc)
    assert not is_transitive(cyc)  # a<b<a needs a<a
    assert not is_linear(reflexive_closure(chain))


def test_reflexive_closure_examples(ab):
    assert reflexive_closure(Relation.empty(ab)) == diagonal(ab)
    r = Relation.from_pairs(ab, [("a", "b")])
    assert set(reflexive_closure(r).pairs()) == {("a", "a"), ("b", "b"), ("a", "b")}
    le = reflexive_closure(r)
    assert reflexive_closure(le) == le


@pytest.mark.parametrize("n", range(4))
def test_reflexive_closure_is_least_reflexive_superset(n):
    u = universe(n)
    width = (1 << n) - 1
    all_rels = [Relation(u, tuple(code >> (i * n) & width for i in range(n))) for code in range(1 << n * n)]
    for r in all_rels:
        closure = reflexive_closure(r)
        assert r.issubset(closure) and is_reflexive(closure)
        supersets = [s for s in all_rels if is_reflexive(s) and r.issubset(s)]
        assert all(closure.issubset(s) for s in supersets)


def test_up_down_examples(abc, chain):
    assert up(chain, "a").labels == ["b", "c"]
    assert down(reflexive_closure(chain), "b").labels == ["a", "b"]
    assert up_set(chain, abc.empty()) == abc.empty()
    assert down_set(chain, abc.empty()) == abc.empty()


def test_rays_examples(abc, chain):
    assert left_ray(chain, "b").labels == ["a"]
    assert left_ray(reflexive_closure(chain), "b").labels == ["a", "b"]
    assert right_ray(chain, "a").labels == ["b", "c"]
    assert left_ray(Relation.empty(abc), "a").labels == []


def test_slice_examples(abc, chain):
    assert slice(chain, "a").labels == ["b", "c"]
    assert slice(diagonal(abc), "a").labels == ["a"]
    assert slice(Relation.empty(abc), "a").labels == []


@given(relations())
def test_rays_agree_with_principal_sets(r):
    for a in r.universe.labels:
        assert left_ray(r, a) == down_set(r, r.universe.singleton(a))
        assert right_ray(r, a) == up_set(r, r.universe.singleton(a))


@given(relations(min_n=1).flatmap(lambda r: subsets_of(r.universe).flatmap(
    lambda a: subsets_of(r.universe).map(lambda b: (r, a, b)))))
def test_up_set_distributes_over_union(args):
    r, a, b = args
    assert up_set(r, a | b) == up_set(r, a) | up_set(r, b)
    assert down_set(r, a | b) == down_set(r, a) | down_set(r, b)


@given(relations(max_n=4))
def test_transitivity_matches_triple_scan(r):
    pairs = set(r.pairs())
    assert is_transitive(r) == is_transitive_pairs(r.universe.labels, pairs)


@given(relations())
def test_transpose_and_matrix_text_roundtrip(r):
    assert r.transpose().transpose() == r
    assert set(r.transpose().pairs()) == {(y, x) for x, y in r.pairs()}
    assert relation_from_matrix_text(relation_to_matrix_text(r), r.universe) == r


def test_matrix_text_default_labels():
    r = relation_from_matrix_text("011\n001\n000\n")
    assert r.universe.labels == ("a", "b", "c")
    assert set(r.pairs()) == {("a", "b"), ("a", "c"), ("b", "c")}
    with pytest.raises(InputError):
        relation_from_matrix_text("01\n2\n")


def test_relation_json(abc):
    r = relation_from_json({"universe": ["a", "b", "c"], "pairs": [["a", "b"]]})
    assert r.pairs() == [("a", "b")]
    assert relation_from_json(r.to_json()) == r
    with pytest.raises(InputError):
        relation_from_json({"universe": ["a"], "pairs": [], "x": 0})
    with pytest.raises(InputError):
        relation_from_json({"universe": ["a"], "pairs": [["a", "q"]]})


def test_holds_accepts_labels_and_indices(chain):
    assert chain.holds("a", "c") and chain.holds(0, 2)
    assert not any(chain.holds(x, x) for x in "abc")
    assert sorted(chain.pairs()) == sorted(p for p in product("abc", repeat=2) if p[0] < p[1])
