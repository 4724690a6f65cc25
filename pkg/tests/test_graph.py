import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_graph
from domcrit import families
from domcrit.graph import (
    Graph, GraphError, add_edge, complement, delete_vertex, induced_subgraph, join,
    neighbors, remove_edge, subdivide_edge,
)
from domcrit.iso import is_isomorphic


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_neighbors_basic():
    assert neighbors(Graph.complete(3), 0) == {1, 2}
    assert neighbors(Graph.empty(4), 2) == frozenset()
    with pytest.raises(GraphError):
        neighbors(Graph.complete(3), 3)


def test_neighbors_of_a1_in_G3():
    g3 = families.make_Gk(3)
    got = g3.label_set(neighbors(g3.graph, g3["a1"]))
    assert got == {"b3", "b1", "c3", "c1"}


def test_induced_subgraph_examples():
    path3, remap = induced_subgraph(Graph.cycle(5), [1, 2, 3])
    assert remap == (1, 2, 3)
    assert path3 == Graph.path(3)
    g3 = families.make_Gk(3)
    claw, _ = induced_subgraph(g3.graph, g3.ids("a1", "b3", "b1", "c1"))
    assert is_isomorphic(claw, families.make_star(3).graph).isomorphic


def test_mutation_examples():
    c4, w = subdivide_edge(Graph.complete(3), (0, 1))
    assert w == 3 and is_isomorphic(c4, Graph.cycle(4)).isomorphic
    claw = families.make_star(3)
    assert delete_vertex(claw.graph, claw["center"]) == Graph.empty(3)
    assert is_isomorphic(add_edge(Graph.path(3), 0, 2), Graph.complete(3)).isomorphic


def test_mutation_errors():
    with pytest.raises(GraphError):
        subdivide_edge(Graph.path(3), (0, 2))
    with pytest.raises(GraphError):
        add_edge(Graph.path(3), 0, 1)
    with pytest.raises(GraphError):
        remove_edge(Graph.path(3), 0, 2)
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, [0b1])  # loop
    with pytest.raises(GraphError):
        Graph.from_edges(513, [])


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_size_changes(g):
    for e in g.edges():
        h, w = subdivide_edge(g, e)
        assert (h.n, h.edge_count()) == (g.n + 1, g.edge_count() + 1)
        assert w == g.n
        break
    for v in range(g.n):
        h = delete_vertex(g, v)
        assert (h.n, h.edge_count()) == (g.n - 1, g.edge_count() - g.degree(v))


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_induced_on_everything_is_isomorphic(g):
    h, remap = induced_subgraph(g, range(g.n))
    assert remap == tuple(range(g.n))
    assert is_isomorphic(g, h).isomorphic


def test_join_and_complement():
    k23 = join(Graph.empty(2), Graph.empty(3))
    assert k23.edge_count() == 6
    assert complement(complement(k23)) == k23
    assert complement(Graph.complete(4)) == Graph.empty(4)


def test_large_order_backend():
    rng = random.Random(5)
    g = random_graph(rng, 300, 0.02)
    assert delete_vertex(g, 150).n == 299
    assert sum(g.degrees()) == 2 * g.edge_count()
