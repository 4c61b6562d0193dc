import pytest
from hypothesis import given

from orderlab.errors import HypothesisNotMetError, InputError, NotANestError
from orderlab.foundation import SetFamily, family_from_label_lists
from orderlab.lab.enumerate import enumerate_nests
from orderlab.nests import (
    Nest,
    check_theorem1,
    complement_lower_formula,
    complement_upper_formula,
    interlocking_via_minmax,
    is_interlocking,
    is_nest,
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
from orderlab.relations import (
    Relation,
    diagonal,
    down,
    is_antisymmetric,
    is_irreflexive,
    is_linear,
    is_transitive,
    left_ray,
    right_ray,
    up,
)

from conftest import nest, nests, universe
from oracles import order_pairs


def test_is_nest_examples(ab, abc):
    assert is_nest(family_from_label_lists(abc, [["a"], ["a", "b"]]))
    assert not is_nest(family_from_label_lists(ab, [["a"], ["b"]]))
    assert is_nest(SetFamily(ab, ()))
    with pytest.raises(NotANestError):
        Nest(family_from_label_lists(ab, [["a"], ["b"]]))


def test_separation_examples(abc):
    fam = family_from_label_lists(abc, [["a"], ["a", "b"]])
    rep = t1_separates(fam)
    assert t0_separates(fam).t0 and not rep.t1
    assert rep.failing_pair == ("b", "a")
    both = fam.union(family_from_label_lists(abc, [["c"], ["b", "c"]]))
    assert t1_separates(both).t1 and t1_separates(both).failing_pair is None
    u1 = universe(1)
    for f in (SetFamily(u1, ()), SetFamily(u1, (1,))):
        assert t0_separates(f).t0 and t1_separates(f).t1


def test_t0_failing_pair(abc):
    rep = t0_separates(family_from_label_lists(abc, [["a"]]))
    assert not rep and rep.failing_pair == ("b", "c")


@pytest.mark.parametrize("n", range(5))
def test_separation_reports_consistent(n):
    for f in enumerate_nests(universe(n)):
        r0, r1 = t0_separates(f), t1_separates(f)
        assert (r0.t0, r0.t1) == (r1.t0, r1.t1)
        assert not r1.t1 or r1.t0
        assert (r0.failing_pair is None) == r0.t0
        assert (r1.failing_pair is None) == r1.t1


def test_order_from_nest_examples(abc, ab):
    assert set(order_from_nest(nest(abc, ["a"], ["a", "b"])).pairs()) == {("a", "b"), ("a", "c"), ("b", "c")}
    assert order_from_nest(nest(ab)) == Relation.empty(ab)
    assert set(order_from_nest(nest(abc, ["a", "b"])).pairs()) == {("a", "c"), ("b", "c")}


def test_reflexive_order_examples(abc, ab):
    n1 = nest(abc, ["a"], ["a", "b"])
    assert set(reflexive_order_from_nest(n1).pairs()) == set(order_from_nest(n1).pairs()) | {
        ("a", "a"), ("b", "b"), ("c", "c")}
    assert reflexive_order_from_nest(nest(ab)) == diagonal(ab)
    assert set(reflexive_order_from_nest(nest(abc, ["a", "b"])).pairs()) == {
        ("a", "a"), ("b", "b"), ("c", "c"), ("a", "c"), ("b", "c")}


def test_product_formula_examples(abc, ab):
    assert set(order_via_product_formula(nest(abc, ["a"], ["a", "b"])).pairs()) == {
        ("a", "b"), ("a", "c"), ("b", "c")}
    empty = nest(ab)
    assert order_via_product_formula(empty) == Relation.empty(ab)
    assert len(non_order_via_complement_formula(empty).pairs()) == 4
    assert order_via_product_formula(nest(ab, [], ["a", "b"])) == Relation.empty(ab)


def test_complement_formula_examples(abc):
    n1 = nest(abc, ["a"], ["a", "b"])
    assert complement_upper_formula(n1, "b").labels == ["a"]
    assert complement_upper_formula(n1, "c").labels == ["a", "b"]  # c is in no member
    assert complement_lower_formula(nest(abc, []), "a").labels == ["a", "b", "c"]


def test_ray_via_nest_examples(abc):
    n1 = nest(abc, ["a"], ["a", "b"])
    assert ray_via_nest(n1, "a", "right").labels == ["b", "c"]
    assert ray_via_nest(n1, "c", "right").labels == []
    assert ray_via_nest(n1, "c", "left").labels == ["a", "b"]
    with pytest.raises(InputError):
        ray_via_nest(n1, "a", "up")


def test_interlocking_examples(ab, abc):
    assert not is_interlocking(family_from_label_lists(ab, [["a", "b"]]))
    assert is_interlocking(family_from_label_lists(abc, [["a", "b"]]))
    assert is_interlocking(family_from_label_lists(abc, [["a"], ["a", "b"]]))
    # arbitrary families, not only nests
    assert is_interlocking(family_from_label_lists(abc, [["a"], ["b"]]))


def test_interlocking_via_minmax_examples(ab, abc):
    assert interlocking_via_minmax(nest(abc, ["a"], ["a", "b"])) == (True, True)
    # the whole space has a maximal element but its complement has no minimal one
    whole = nest(ab, [], ["a"], ["a", "b"])
    assert interlocking_via_minmax(whole) == (False, False)
    assert not is_interlocking(whole)
    with pytest.raises(HypothesisNotMetError):
        interlocking_via_minmax(nest(abc, ["a"]))


def test_twin_nest_criterion_examples(abc):
    left = nest(abc, ["a"], ["a", "b"])
    assert theorem1_sides(left, nest(abc, ["c"], ["b", "c"])) == (True, True)
    assert theorem1_sides(left, nest(abc)) == (False, False)


@pytest.mark.parametrize("n", range(4))
def test_twin_nest_criterion_exhaustive(n):
    all_nests = list(enumerate_nests(universe(n)))
    assert all(check_theorem1(a, b) for a in all_nests for b in all_nests)


@pytest.mark.parametrize("n", range(5))
def test_order_laws_and_oracle(n):
    u = universe(n)
    for ne in enumerate_nests(u):
        lt = order_from_nest(ne)
        assert is_irreflexive(lt) and is_antisymmetric(lt) and is_transitive(lt)
        assert set(lt.pairs()) == order_pairs(u.labels, [set(s.labels) for s in ne])
        if t0_separates(ne).t0:
            assert is_linear(lt)


@given(nests())
def test_product_and_complement_formulas(ne):
    lt = order_from_nest(ne)
    le = reflexive_order_from_nest(ne)
    assert order_via_product_formula(ne) == lt
    assert non_order_via_complement_formula(ne) == lt.complement()
    assert non_reflexive_order_via_complement_formula(ne) == le.complement()


@given(nests())
def test_complement_formulas_readings(ne):
    lt = order_from_nest(ne)
    le = reflexive_order_from_nest(ne)
    for x in ne.universe.labels:
        assert complement_upper_formula(ne, x) == up(le, x).complement()
        assert complement_lower_formula(ne, x) == down(lt, x).complement()
        # the other readings always differ exactly by x
        assert complement_upper_formula(ne, x) | ne.universe.singleton(x) == up(lt, x).complement()
        assert complement_lower_formula(ne, x) - ne.universe.singleton(x) == down(le, x).complement()


@given(nests())
def test_rays_via_nest_match_order_rays(ne):
    lt = order_from_nest(ne)
    for a in ne.universe.labels:
        assert ray_via_nest(ne, a, "right") == right_ray(lt, a)
        assert ray_via_nest(ne, a, "left") == left_ray(lt, a)


@pytest.mark.parametrize("n", range(6))
def test_interlocking_minmax_equivalence(n):
    for ne in enumerate_nests(universe(n)):
        if t0_separates(ne).t0:
            implies, either = interlocking_via_minmax(ne)
            assert is_interlocking(ne) == implies == either


def test_complements_of_nest_give_opposite_order(abc):
    n1 = nest(abc, ["a"], ["a", "b"])
    assert order_from_nest(n1.complements()) == order_from_nest(n1).transpose()
