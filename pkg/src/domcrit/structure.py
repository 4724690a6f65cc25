"""Connectivity, induced-subgraph detection and cut-set conditions."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from . import families
from .graph import Graph, bits, is_independent, mask_of, popcount, reach
from .solvers import _max_independent


class HypothesisUnmet(ValueError):
    """The input does not satisfy the hypothesis of the check that was requested."""


@dataclass(frozen=True)
class CutWitness:
    cut: frozenset[int]
    components_after: int
    ratio: Fraction


@dataclass(frozen=True)
class InducedHit:
    pattern: str
    mapping: dict[int, int]  # pattern vertex -> host vertex

    @property
    def host_vertices(self) -> frozenset[int]:
        return frozenset(self.mapping.values())


# ---------------------------------------------------------------- connectivity

def _local_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Number of internally disjoint s-t paths (s, t non-adjacent), stopping at ``cap``.

    Unit-capacity max flow on the split graph: vertex v becomes v_in = 2v and
    v_out = 2v + 1 joined by an arc of capacity one.
    """
    n = g.n
    flow: dict[tuple[int, int], int] = {}

    def residual(a: int, b: int) -> int:
        # arc capacities: v_in -> v_out is 1 (inf for s, t); u_out -> v_in is 1 per edge
        if a // 2 == b // 2:
            base = 1 if a % 2 == 0 and b == a + 1 else 0
            if a // 2 in (s, t) and base:
                base = n
        elif a % 2 == 1 and b % 2 == 0 and g.rows[a // 2] >> (b // 2) & 1:
            base = 1
        else:
            base = 0
        return base - flow.get((a, b), 0) + flow.get((b, a), 0)

    def arcs(a: int):
        v = a // 2
        yield a ^ 1
        if a % 2 == 1:
            for u in bits(g.rows[v]):
                yield 2 * u
        else:
            for u in bits(g.rows[v]):
                yield 2 * u + 1

    source, sink = 2 * s + 1, 2 * t
    value = 0
    while value < cap:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in arcs(a):
                if b not in parent and residual(a, b) > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            if flow.get((b, a), 0):
                flow[(b, a)] -= 1
            else:
                flow[(a, b)] = flow.get((a, b), 0) + 1
            b = a
        value += 1
    return value


def connectivity(g: Graph) -> int:
    """Vertex connectivity; ``n - 1`` when no cut set exists."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    best = n - 1
    for s in range(n):
        if s > best:
            # some vertex among 0..best lies outside any minimum cut
            break
        for t in range(s + 1, n):
            if g.rows[s] >> t & 1:
                continue
            best = min(best, _local_connectivity(g, s, t, best))
            if best == 0:
                return 0
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    return connectivity(g) >= k


# ---------------------------------------------------------------- induced subgraphs

def find_induced(g: Graph, pattern: Graph, name: str = "pattern") -> InducedHit | None:
    """An induced copy of ``pattern`` in ``g`` (edges and non-edges preserved), or ``None``."""
    p = pattern.n
    if p > g.n:
        return None
    if p == 0:
        return InducedHit(name, {})
    pdeg = pattern.degrees()
    hdeg = g.degrees()
    # highest degree first, then keep the order connected when possible
    order: list[int] = []
    placed = 0
    left = set(range(p))
    while left:
        attached = [v for v in left if pattern.rows[v] & placed]
        pool = attached or list(left)
        v = max(pool, key=lambda x: (popcount(pattern.rows[x] & placed), pdeg[x], -x))
        order.append(v)
        placed |= 1 << v
        left.discard(v)

    mapping: dict[int, int] = {}
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == p:
            return True
        v = order[pos]
        cand = g.all_mask & ~used
        for u in order[:pos]:
            hu = mapping[u]
            if pattern.rows[v] >> u & 1:
                cand &= g.rows[hu]
            else:
                cand &= ~g.rows[hu]
        for w in bits(cand):
            if hdeg[w] < pdeg[v]:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            del mapping[v]
        return False

    return InducedHit(name, dict(mapping)) if extend(0) else None


def is_free(g: Graph, patterns: Iterable[tuple[str, Graph]]) -> InducedHit | None:
    """First induced hit among ``patterns`` or ``None`` when ``g`` is free of all of them."""
    for name, pat in patterns:
        hit = find_induced(g, pat, name)
        if hit is not None:
            return hit
    return None


def find_claw(g: Graph) -> InducedHit | None:
    """Direct claw search: three pairwise non-adjacent neighbours of one centre."""
    rows = g.rows
    for c in range(g.n):
        nb = rows[c]
        for a in bits(nb):
            rest_a = nb & ~rows[a] & ~((1 << (a + 1)) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~rows[b] & ~((1 << (b + 1)) - 1)
                if rest_b:
                    d = (rest_b & -rest_b).bit_length() - 1
                    return InducedHit("K13", {0: c, 1: a, 2: b, 3: d})
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def pattern(name: str) -> Graph:
    """Named small patterns: K13, K14, N<s1><s2><s3> (single-digit paths)."""
    if name == "K13":
        return families.make_star(3).graph
    if name == "K14":
        return families.make_star(4).graph
    if name.startswith("N") and len(name) == 4:
        return families.make_net(*(int(c) for c in name[1:])).graph
    raise KeyError(name)


# ---------------------------------------------------------------- cut sets

def _count_components(g: Graph, alive: int) -> int:
    count = 0
    while alive:
        alive &= ~reach(g.rows, alive & -alive, alive)
        count += 1
    return count


def cutset_ratio(g: Graph, s: Iterable[int]) -> CutWitness:
    sm = mask_of(s)
    comps = _count_components(g, g.all_mask & ~sm)
    if comps <= 1:
        raise ValueError("not a cut set: removal leaves at most one component")
    size = popcount(sm)
    return CutWitness(frozenset(bits(sm)), comps, Fraction(size, comps))


def find_violating_cutset(g: Graph, max_size: int) -> CutWitness | None:
    """Smallest cut set S with |S| <= max_size and |S| < ω(G - S), or ``None``."""
    n = g.n
    max_size = min(max_size, max(n - 2, 0))
    full = g.all_mask
    for size in range(0, max_size + 1):
        for s in combinations(range(n), size):
            sm = mask_of(s)
            comps = _count_components(g, full & ~sm)
            if comps > 1 and comps > size:
                return CutWitness(frozenset(s), comps, Fraction(size, comps))
    return None


# ---------------------------------------------------------------- claw-free independence bound

def check_lemma_P(g: Graph, x: Iterable[int], i: Iterable[int]) -> bool:
    """``|I| <= |X| + 1`` for a claw-free graph, independent ``I`` and connected ``X`` dominating ``I``."""
    x, i = set(x), set(i)
    xm = mask_of(x)
    if find_claw(g) is not None:
        raise HypothesisUnmet("graph contains a claw")
    if not is_independent(g, i):
        raise HypothesisUnmet("I is not independent")
    if not xm or reach(g.rows, xm & -xm, xm) != xm:
        raise HypothesisUnmet("X does not induce a connected subgraph")
    covered = xm
    for v in x:
        covered |= g.rows[v]
    if mask_of(i) & ~covered:
        raise HypothesisUnmet("X does not dominate I")
    return len(i) <= len(x) + 1


def connected_subsets(g: Graph, max_size: int):
    """Yield masks of all connected vertex sets with 1..max_size vertices, each once."""
    rows = g.rows

    def grow(chosen: int, size: int, frontier: int, forbidden: int):
        yield chosen
        if size == max_size:
            return
        for w in bits(frontier & ~forbidden):
            yield from grow(chosen | (1 << w), size + 1,
                            (frontier | rows[w]) & ~chosen & ~(1 << w), forbidden)
            forbidden |= 1 << w

    for v in range(g.n):
        # v is the smallest member
        low = (1 << (v + 1)) - 1
        yield from grow(1 << v, 1, rows[v] & ~low, low)


def lemma_P_violations(g: Graph, max_x: int = 3) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All connected ``X`` (|X| <= max_x) whose closed neighbourhood holds an independent set larger than |X|+1.

    The largest independent set dominated by ``X`` is a maximum independent set of
    ``G[N[X]]``, so checking that one covers every ``I``.
    """
    if find_claw(g) is not None:
        raise HypothesisUnmet("graph contains a claw")
    out = []
    for xm in connected_subsets(g, max_x):
        cover = xm
        for v in bits(xm):
            cover |= g.rows[v]
        best = _max_independent(g.rows, cover)
        if popcount(best) > popcount(xm) + 1:
            out.append((frozenset(bits(xm)), frozenset(bits(best))))
    return out
