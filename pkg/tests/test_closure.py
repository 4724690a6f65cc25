import random

import pytest

from conftest import random_claw_free
from domcrit import families
from domcrit.closure import (
    PummVerdict, check_theorem_pumm, classify, closure, is_closed, pumm_hypothesis,
)
from domcrit.families import FamilySpec
from domcrit.graph import Graph
from domcrit.hamilton import is_hamiltonian
from domcrit.iso import check_mapping
from domcrit.structure import HypothesisUnmet, find_claw
from oracles import literal_local_completion


def test_complete_and_long_cycles_are_closed():
    assert closure(Graph.complete(6)).graph == Graph.complete(6)
    for n in (7, 9, 12):
        res = closure(Graph.cycle(n))
        assert res.graph == Graph.cycle(n) and res.trace == ()


def test_chorded_c6_matches_literal():
    g = Graph.from_edges(6, Graph.cycle(6).edges() + [(0, 2)])
    assert closure(g).graph == literal_local_completion(g)


def test_matches_literal_definition_on_random_claw_free():
    rng = random.Random(17)
    for _ in range(100):
        g = random_claw_free(rng, rng.randint(3, 10))
        assert closure(g).graph == literal_local_completion(g)


def test_properties_on_random_claw_free():
    rng = random.Random(23)
    for _ in range(150):
        g = random_claw_free(rng, rng.randint(3, 10))
        res = closure(g)
        cl = res.graph
        assert cl.n == g.n
        assert set(g.edges()) <= set(cl.edges())
        assert sorted(set(cl.edges()) - set(g.edges())) == sorted(res.added_edges)
        assert is_closed(cl)
        assert closure(cl).graph == cl
        assert find_claw(cl) is None
        assert is_hamiltonian(cl) == is_hamiltonian(g)


@pytest.mark.parametrize("name", ["P333", "F1min", "F2min", "F3min", "J6", "N111", "N333"])
def test_fixtures_preserve_claw_freeness(name):
    g = families.build(families.FIXTURES[name]).graph
    assert find_claw(closure(g).graph) is None


def test_rejects_claw_and_disconnected():
    with pytest.raises(HypothesisUnmet):
        closure(families.make_Gk(3).graph)
    with pytest.raises(HypothesisUnmet):
        closure(Graph.empty(2))


@pytest.mark.parametrize("spec", [
    FamilySpec("F1", (3, 3, 3, 3, 3)), FamilySpec("F1", (4, 3, 3, 5, 3)), FamilySpec("F1", (3, 5, 4, 3, 4)),
    FamilySpec("F2", (3, 3, 2)), FamilySpec("F2", (4, 3, 2)), FamilySpec("F2", (3, 5, 4)),
    FamilySpec("F3", (3,)), FamilySpec("F3", (6,)), FamilySpec("F3", (10,)), FamilySpec("P333"),
])
def test_classify_self_recognition(spec):
    g = families.build(spec).graph
    got = classify(g)
    assert got.verdict == spec.kind
    member = families.build(got.spec).graph
    assert check_mapping(g, member, got.mapping)


def test_classify_recovers_permuted_parameters():
    got = classify(families.make_F1(3, 4, 3, 3, 3).graph)
    assert got.verdict == "F1" and sorted(got.spec.params[:3]) == [3, 3, 4]


def test_classify_none():
    assert classify(families.make_Gk(3).graph).verdict == "none"
    assert classify(Graph.complete(9)).verdict == "none"


def test_pumm_examples():
    assert check_theorem_pumm(families.make_P333().graph) == PummVerdict(True, 2, "isomorphic to P333")
    assert check_theorem_pumm(Graph.complete(5)).branch == 1


def test_pumm_branch_3_on_F3():
    v = check_theorem_pumm(families.make_F3(3).graph)
    assert v.holds and v.branch in (1, 3)


def test_pumm_hypothesis_rejections():
    assert pumm_hypothesis(Graph.path(4)) == "not 2-connected"
    assert pumm_hypothesis(families.make_Gk(3).graph) == "contains K13"
    with pytest.raises(HypothesisUnmet):
        check_theorem_pumm(families.make_Gk(3).graph)
