import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import data_lines, random_connected, random_graph
from domcrit import families, graph6
from domcrit.graph import Graph
from domcrit.hamilton import (
    LEMMAS, CycleOrientation, InstanceTooLarge, LemmaHypothesisError, all_longest_cycles,
    check_cycle, hamiltonian_cycle, is_hamiltonian, is_valid_cycle, longest_cycle,
    longest_cycle_length_dp, verify_cycle_lemmas,
)
from domcrit.structure import connectivity, find_claw
from oracles import brute_hamiltonian, brute_longest_cycle


@pytest.mark.parametrize("k", range(3, 9))
def test_Gk_non_hamiltonian(k):
    assert not is_hamiltonian(families.make_Gk(k).graph)


@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_cycles_and_cliques_hamiltonian(n):
    for g in (Graph.cycle(n), Graph.complete(n)):
        cyc = hamiltonian_cycle(g)
        assert cyc is not None and len(cyc) == n and is_valid_cycle(g, cyc)


def test_small_orders_not_hamiltonian():
    assert not is_hamiltonian(Graph.complete(2))
    assert not is_hamiltonian(Graph.complete(1))
    assert not is_hamiltonian(Graph.empty(0))


def test_fig5_non_hamiltonian_by_brute_force():
    g = families.make_fig5().graph
    assert not is_hamiltonian(g)
    assert not brute_hamiltonian(g)


def test_matches_brute_force_random():
    rng = random.Random(2)
    for _ in range(400):
        g = random_graph(rng, rng.randint(0, 8))
        assert is_hamiltonian(g) == brute_hamiltonian(g)


def test_longest_cycle_examples():
    chorded = Graph.from_edges(6, Graph.cycle(6).edges() + [(0, 2)])
    assert len(longest_cycle(chorded)) == 6
    assert len(longest_cycle(families.make_Gk(3).graph)) == 8 == brute_longest_cycle(families.make_Gk(3).graph)
    # P333 is the exceptional non-Hamiltonian member: only two of its three paths fit on one cycle
    p333 = families.make_P333().graph
    assert len(longest_cycle(p333)) == 8 == brute_longest_cycle(p333)
    assert not brute_hamiltonian(p333)


def test_longest_cycle_refuses_large():
    with pytest.raises(InstanceTooLarge):
        longest_cycle(Graph.complete(19))


@settings(max_examples=120, deadline=None)
@given(st.integers(3, 8), st.randoms(use_true_random=False))
def test_longest_cycle_matches_brute(n, rnd):
    g = random_connected(rnd, n)
    want = brute_longest_cycle(g)
    assert longest_cycle_length_dp(g) == want
    if want:
        c = longest_cycle(g)
        assert len(c) == want and is_valid_cycle(g, c.cycle)


def test_dfs_and_dp_agree_up_to_14():
    rng = random.Random(9)
    for _ in range(60):
        g = random_connected(rng, rng.randint(9, 14))
        if connectivity(g) < 2:
            continue
        assert len(longest_cycle(g)) == longest_cycle_length_dp(g)
        if is_hamiltonian(g):
            assert longest_cycle_length_dp(g) == g.n


def test_orientation_maps():
    c = CycleOrientation((4, 1, 3, 0, 2))
    for v in c.cycle:
        assert c.pred(c.succ(v)) == v
        assert c.succ(v, 2) == c.succ(c.succ(v))
    assert c.segment(1, 0) == [1, 3, 0]
    for u in c.cycle:
        for v in c.cycle:
            if u != v and c.succ(v) != u:
                assert len(c.segment(u, v)) + len(c.segment(c.succ(v), c.pred(u))) == len(c)


def test_lemma_hypotheses():
    with pytest.raises(LemmaHypothesisError):
        verify_cycle_lemmas(Graph.complete(4))
    with pytest.raises(LemmaHypothesisError):
        verify_cycle_lemmas(Graph.path(5))


def test_G3_claw_gate():
    rep = verify_cycle_lemmas(families.make_Gk(3).graph)
    assert not rep.claw_free
    res = rep.results
    assert res["L21"] == "pass" and res["L22"] == "pass"
    assert {res[x] for x in ("Lh0", "Lh1", "Lh0n")} == {"hypothesis unmet"}


def test_claw_free_corpus_le8_is_hamiltonian_when_2_connected():
    for line in data_lines("clawfree_connected_le8.g6"):
        g = graph6.decode(line)
        if connectivity(g) >= 2:
            assert is_hamiltonian(g), line


@pytest.mark.parametrize("name", ["P333", "F1min", "F2min", "F3min"])
def test_lemmas_on_claw_free_fixtures_strict(name):
    g = families.build(families.FIXTURES[name]).graph
    assert connectivity(g) >= 2 and not is_hamiltonian(g) and find_claw(g) is None
    reports = verify_cycle_lemmas(g, strict=True)
    assert reports
    for rep in reports:
        assert set(rep.results) == set(LEMMAS)
        assert set(rep.results.values()) == {"pass"}, rep.results


def test_lemma_violations_detected_on_planted_cycle():
    # theta graph: cycle 0..5 plus a vertex 6 joined to 0 and 1; C is not longest so L21 fails
    g = Graph.from_edges(7, Graph.cycle(6).edges() + [(6, 0), (6, 1)])
    rep = check_cycle(g, CycleOrientation(tuple(range(6))), claw_free=True)
    assert rep.results["L21"] == "fail"


def test_all_longest_cycles_are_longest():
    rng = random.Random(4)
    for _ in range(30):
        g = random_connected(rng, rng.randint(4, 8))
        want = longest_cycle_length_dp(g)
        if not want:
            continue
        cycles = list(all_longest_cycles(g))
        assert cycles
        assert all(len(c) == want and is_valid_cycle(g, c.cycle) for c in cycles)
