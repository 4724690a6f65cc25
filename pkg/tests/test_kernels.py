import random

import numpy as np
import pytest

from conftest import random_connected, random_graph
from domcrit import criticality, families, graph6, hamilton, kernels, solvers, structure
from domcrit.graph import Graph


def _decode(lines: list[str], max_n: int = kernels.FAST_MAX_N):
    data = ("\n".join(lines) + "\n").encode()
    starts, pos = [], 0
    for ln in lines:
        starts.append(pos)
        pos += len(ln) + 1
    buf = np.frombuffer(data, np.uint8)
    return kernels.decode_lines(buf, np.array(starts, np.int64), np.array([len(x) for x in lines], np.int64), max_n)


def _ends():
    return np.zeros(1 << (kernels.FAST_MAX_N - 1), np.uint64)


def test_decode_matches_library():
    rng = random.Random(1)
    graphs = [random_graph(rng, rng.randint(0, 16)) for _ in range(300)]
    ns, adj, st = _decode([graph6.encode(g) for g in graphs])
    for g, n, row, s in zip(graphs, ns, adj, st):
        assert s == kernels.OK and n == g.n
        assert list(row[:g.n]) == list(g.rows)


def test_decode_status_codes():
    big = graph6.encode(Graph.complete(17))
    ns, adj, st = _decode(["A_", "A", big, "?"])
    assert list(st[:2]) == [kernels.OK, kernels.BAD]
    assert st[2] == kernels.TOO_BIG
    assert st[3] == kernels.OK and ns[3] == 0


def test_structural_kernels_match_library():
    rng = random.Random(2)
    for _ in range(600):
        g = random_graph(rng, rng.randint(1, 10))
        a, n = kernels.rows_of(g), g.n
        assert kernels.claw_free(a, n) == structure.is_claw_free(g)
        kappa = structure.connectivity(g)
        for k in (1, 2, 3):
            assert kernels.kappa_at_least(a, n, k) == (kappa >= k)
        for ms in (2, 4):
            assert kernels.violating_cut(a, n, ms) == (structure.find_violating_cutset(g, ms) is not None)


def test_hamiltonicity_kernels_match_library():
    rng = random.Random(3)
    ends = _ends()
    for _ in range(600):
        g = random_graph(rng, rng.randint(3, 12))
        a, n = kernels.rows_of(g), g.n
        h = hamilton.is_hamiltonian(g)
        assert kernels.hamiltonian(a, n, ends) == h
        assert kernels.hamiltonian_dp(a, n, ends) == h


@pytest.mark.parametrize("kind", ["gamma", "gamma_c", "gamma_t"])
def test_domination_kernels_match_library(kind):
    rng = random.Random(4)
    code = kernels.KIND_CODES[kind]
    for _ in range(300):
        g = random_connected(rng, rng.randint(1, 10))
        a, n = kernels.rows_of(g), g.n
        value = solvers.solve(g, kind).value
        for k in range(1, 6):
            assert kernels.value_equals(a, np.uint64(g.all_mask), code, k) == (value == k)
            assert kernels.vertex_critical(a, n, code, k) == criticality.check_vertex_critical(g, kind, k).critical


def test_fixture_criticality_in_kernels():
    for name, kind, k in (("G4", "gamma", 4), ("J6", "gamma_c", 3), ("Fig5", "gamma_c", 5)):
        g = families.build(families.FIXTURES[name]).graph
        assert kernels.vertex_critical(kernels.rows_of(g), g.n, kernels.KIND_CODES[kind], k)


def test_scan_batch_defers_bad_rows():
    ns, adj, st = _decode(["A_", "A"])
    out = kernels.scan_batch(kernels.THEOREM_CODES["Ch-soundness"], ns, adj, st, 4)
    assert list(out) == [kernels.UNMET, kernels.DEFER]


def test_lemma_targets_kernel():
    lines = [graph6.encode(families.make_P333().graph), graph6.encode(Graph.complete(5)),
             graph6.encode(families.make_Gk(3).graph), graph6.encode(Graph.path(5))]
    ns, adj, st = _decode(lines)
    assert list(kernels.lemma_targets(ns, adj, st)) == [True, False, False, False]


def test_rows_of_limit():
    with pytest.raises(ValueError):
        kernels.rows_of(Graph.empty(65))
