import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import data_lines, random_connected, random_graph
from domcrit import families, graph6
from domcrit.graph import Graph
from domcrit.hamilton import is_hamiltonian
from domcrit.structure import (
    HypothesisUnmet, check_lemma_P, connectivity, cutset_ratio, find_claw, find_induced,
    find_violating_cutset, is_k_connected, lemma_P_violations, pattern,
)
from oracles import brute_connectivity, brute_induced


@pytest.mark.parametrize("g,kappa", [
    (Graph.complete(5), 4),
    (Graph.cycle(6), 2),
    (families.make_Gk(3).graph, 2),
    (Graph.complete(1), 0),
    (Graph.empty(3), 0),
    (Graph.path(4), 1),
])
def test_connectivity_examples(g, kappa):
    assert connectivity(g) == kappa


def test_connectivity_matches_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9))
        k = brute_connectivity(g)
        assert connectivity(g) == k
        assert is_k_connected(g, k)


def test_claw_hit_in_G3():
    lg = families.make_Gk(3)
    hit = find_claw(lg.graph)
    assert hit is not None
    g = lg.graph
    center = hit.mapping[0]
    leaves = [hit.mapping[i] for i in (1, 2, 3)]
    assert all(g.adjacent(center, x) for x in leaves)
    assert not any(g.adjacent(a, b) for a in leaves for b in leaves if a != b)
    # the named claw is one valid answer
    assert lg.graph.degree(lg["a1"]) == 4


def test_no_claw_in_complete():
    assert find_claw(Graph.complete(7)) is None


@pytest.mark.parametrize("name", ["K13", "K14", "N122", "N113"])
def test_find_induced_matches_brute(name):
    p = pattern(name)
    rng = random.Random(len(name) * 31 + ord(name[-1]))
    for _ in range(60 if p.n <= 5 else 12):
        g = random_graph(rng, rng.randint(p.n, 8))
        hit = find_induced(g, p)
        assert (hit is not None) == brute_induced(g, p)
        if hit is not None:
            m = hit.mapping
            assert all(g.adjacent(m[a], m[b]) == p.adjacent(a, b)
                       for a in range(p.n) for b in range(a + 1, p.n))


def test_claw_free_corpus_has_no_claw():
    for line in data_lines("clawfree_connected_le8.g6"):
        assert find_claw(graph6.decode(line)) is None


def test_cutset_ratio_examples():
    lg = families.make_Jl(8)
    w = cutset_ratio(lg.graph, lg.ids(*[f"v{i}" for i in range(1, 9)]))
    assert (w.components_after, w.ratio) == (12, Fraction(8, 12))
    lt = families.make_Tl(6)
    s = [lt["u"], *lt.ids("y1", "y2", "y3", "y4"), *(lt[f"u_{{1,{j}}}"] for j in range(1, 7))]
    w = cutset_ratio(lt.graph, s)
    assert (len(w.cut), w.components_after, w.ratio) == (11, 12, Fraction(11, 12))
    assert cutset_ratio(Graph.cycle(6), [0, 3]).ratio == 1


def test_cutset_ratio_rejects_non_cut():
    with pytest.raises(ValueError):
        cutset_ratio(Graph.complete(4), [0])


def test_violating_cutset_examples():
    w = find_violating_cutset(families.make_Jl(8).graph, 8)
    assert w is not None and w.ratio < 1
    assert find_violating_cutset(Graph.complete(5), 3) is None
    assert find_violating_cutset(families.make_star(3).graph, 2).cut == {0}


def test_hamiltonian_graphs_have_no_violating_cut():
    rng = random.Random(5)
    for _ in range(200):
        g = random_connected(rng, rng.randint(3, 9))
        if is_hamiltonian(g):
            assert find_violating_cutset(g, 4) is None


def test_lemma_P_examples():
    assert check_lemma_P(Graph.complete(4), {0}, {1})
    with pytest.raises(HypothesisUnmet):
        check_lemma_P(families.make_star(3).graph, {0}, {1, 2, 3})
    with pytest.raises(HypothesisUnmet):
        check_lemma_P(Graph.path(3), {0}, {0, 1})
    with pytest.raises(HypothesisUnmet):
        check_lemma_P(Graph.path(4), {0, 3}, {1})
    with pytest.raises(HypothesisUnmet):
        check_lemma_P(Graph.path(4), {0}, {3})


def test_lemma_P_on_claw_free_corpus():
    for line in data_lines("clawfree_connected_le8.g6"):
        assert lemma_P_violations(graph6.decode(line), 3) == []


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 7), st.randoms(use_true_random=False))
def test_lemma_P_on_line_graphs(n, rnd):
    # line graphs are claw-free
    base = random_graph(rnd, n, 0.5)
    edges = base.edges()
    lg = Graph.from_edges(len(edges), [(i, j) for i in range(len(edges)) for j in range(i + 1, len(edges))
                                       if set(edges[i]) & set(edges[j])])
    if lg.n == 0 or lg.n > 12:
        return
    assert find_claw(lg) is None
    assert lemma_P_violations(lg, 2) == []


def test_lemma_P_exhaustive_pairs_small():
    from itertools import combinations
    from oracles import adj_sets, connected_set
    for line in data_lines("clawfree_connected_le8.g6"):
        g = graph6.decode(line)
        if g.n > 6:
            continue
        adj = adj_sets(g)
        for xs in range(1, 4):
            for x in combinations(range(g.n), xs):
                if not connected_set(adj, x):
                    continue
                cover = set(x).union(*(adj[v] for v in x))
                for size in range(1, len(cover) + 1):
                    for i in combinations(sorted(cover), size):
                        if all(not (adj[a] & set(i)) for a in i):
                            assert check_lemma_P(g, x, i)
