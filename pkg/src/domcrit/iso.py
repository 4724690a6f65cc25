"""Isomorphism testing by colour refinement followed by backtracking."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, bits, popcount


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    mapping: dict[int, int] = field(default_factory=dict)
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def triangle_counts(g: Graph) -> list[int]:
    rows = g.rows
    return [sum(popcount(rows[u] & rows[v]) for u in bits(rows[v])) // 2 for v in range(g.n)]


def _refine(graphs: list[Graph], init: list[list[int]]) -> list[list[int]]:
    """Joint colour refinement so colour ids are comparable across graphs."""
    colors = [list(c) for c in init]
    ncolors = len({c for cs in colors for c in cs})
    while True:
        table: dict[tuple, int] = {}
        new = []
        for g, cs in zip(graphs, colors):
            row = []
            for v in range(g.n):
                sig = (cs[v], tuple(sorted(cs[u] for u in bits(g.rows[v]))))
                row.append(table.setdefault(sig, len(table)))
            new.append(row)
        if len(table) == ncolors:
            return new
        colors, ncolors = new, len(table)


def is_isomorphic(g1: Graph, g2: Graph) -> IsoResult:
    """Decide isomorphism; on success ``mapping`` sends vertices of ``g1`` to ``g2``."""
    if g1.n != g2.n:
        return IsoResult(False, reason="vertex count")
    if g1.edge_count() != g2.edge_count():
        return IsoResult(False, reason="edge count")
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return IsoResult(False, reason="degree sequence")
    t1, t2 = triangle_counts(g1), triangle_counts(g2)
    if sorted(t1) != sorted(t2):
        return IsoResult(False, reason="triangle counts")
    init = [[hash((d, t)) for d, t in zip(g.degrees(), tc)] for g, tc in ((g1, t1), (g2, t2))]
    c1, c2 = _refine([g1, g2], init)
    if sorted(c1) != sorted(c2):
        return IsoResult(False, reason="refined colour classes")

    n = g1.n
    # rarest colour classes first, then stay connected to already placed vertices
    freq: dict[int, int] = {}
    for c in c1:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        touching = [v for v in remaining if g1.rows[v] & placed]
        pool = touching or list(remaining)
        v = min(pool, key=lambda x: (freq[c1[x]], -popcount(g1.rows[x] & placed), x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(c2[w], []).append(w)

    mapping: dict[int, int] = {}
    used = 0
    r1, r2 = g1.rows, g2.rows

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        v = order[pos]
        for w in by_color[c1[v]]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:pos]:
                if (r1[v] >> u & 1) != (r2[w] >> mapping[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            del mapping[v]
        return False

    if extend(0):
        return IsoResult(True, dict(mapping), reason="mapping found")
    return IsoResult(False, reason="search exhausted")


def check_mapping(g1: Graph, g2: Graph, mapping: dict[int, int]) -> bool:
    if g1.n != g2.n or sorted(mapping) != list(range(g1.n)) or sorted(mapping.values()) != list(range(g2.n)):
        return False
    return all(g1.adjacent(u, v) == g2.adjacent(mapping[u], mapping[v])
               for u in range(g1.n) for v in range(u + 1, g1.n))
