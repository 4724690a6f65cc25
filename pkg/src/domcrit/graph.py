"""Simple undirected graphs on dense vertex ids with bit-mask adjacency rows.

Each row is a Python ``int`` whose bit ``u`` is set when ``u`` is a neighbour.
Python integers are unbounded, so the same representation serves the compact
(n <= 64) case and the general case up to ``MAX_ORDER`` vertices.  The numba
kernels in :mod:`domcrit.kernels` use fixed-width ``uint64`` rows instead.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 512

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid vertex id, edge or construction request."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"vertex count {n} outside 0..{MAX_ORDER}")
        if len(rows) != n:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full or row < 0:
                raise GraphError(f"row {v} references a vertex >= {n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"vertex count {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, rows)

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> "Graph":
        # skips validation; callers guarantee symmetric, loop-free rows
        g = cls.__new__(cls)
        g._n = n
        g._rows = tuple(rows)
        g._hash = None
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def all_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count()})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} outside 0..{self._n - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return popcount(self._rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self._rows]

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self._rows) // 2

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self._n) for v in bits(self._rows[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[Edge]:
        out = []
        for u in range(self._n):
            missing = self.all_mask & ~self._rows[u] & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(missing))
        return out

    def closed_rows(self) -> list[int]:
        return [r | (1 << v) for v, r in enumerate(self._rows)]

    def is_connected(self, alive: int | None = None) -> bool:
        alive = self.all_mask if alive is None else alive
        if not alive:
            return True
        return reach(self._rows, alive & -alive, alive) == alive

    def components(self, alive: int | None = None) -> list[int]:
        """Component vertex masks of the subgraph induced by ``alive``."""
        alive = self.all_mask if alive is None else alive
        out = []
        while alive:
            comp = reach(self._rows, alive & -alive, alive)
            out.append(comp)
            alive &= ~comp
        return out

    def is_complete(self) -> bool:
        return all(popcount(r) == self._n - 1 for r in self._rows)


def reach(rows: Sequence[int], start: int, alive: int) -> int:
    """Vertices of ``alive`` reachable from the vertex mask ``start`` inside ``alive``."""
    seen = start & alive
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= rows[v]
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen


def neighbors(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return frozenset(bits(g.rows[v]))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(G[s], remap)`` where new vertex ``i`` is old vertex ``remap[i]``."""
    keep = sorted(set(s))
    for v in keep:
        g._check(v)
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in bits(g.rows[old]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(keep), rows), tuple(keep)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v``; vertices above ``v`` shift down by one."""
    g._check(v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))[0]


def add_edge(g: Graph, u: int, v: int) -> Graph:
    u, v = edge(u, v)
    if g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    u, v = edge(u, v)
    if not g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) absent")
    rows = list(g.rows)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, rows)


def subdivide_edge(g: Graph, e: tuple[int, int]) -> tuple[Graph, int]:
    """Replace edge ``uv`` by the path ``u w v`` with fresh vertex ``w = n``."""
    u, v = edge(*e)
    if not g.adjacent(u, v):
        raise GraphError(f"edge ({u}, {v}) absent")
    if g.n + 1 > MAX_ORDER:
        raise GraphError("graph would exceed the maximum order")
    w = g.n
    rows = list(g.rows) + [(1 << u) | (1 << v)]
    rows[u] = (rows[u] & ~(1 << v)) | (1 << w)
    rows[v] = (rows[v] & ~(1 << u)) | (1 << w)
    return Graph._trusted(g.n + 1, rows), w


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` with every cross pair joined."""
    n = g.n + h.n
    low = g.all_mask
    high = h.all_mask << g.n
    rows = [r | high for r in g.rows] + [(r << g.n) | low for r in h.rows]
    return Graph._trusted(n, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph._trusted(g.n + h.n, list(g.rows) + [r << g.n for r in h.rows])


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph._trusted(g.n, [full & ~r & ~(1 << v) for v, r in enumerate(g.rows)])


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(not (g.rows[v] & m) for v in bits(m))


def is_clique(g: Graph, mask: int) -> bool:
    return all((g.rows[v] | (1 << v)) & mask == mask for v in bits(mask))


def bfs_order(g: Graph, start: int) -> list[int]:
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in bits(g.rows[v]):
            if u not in seen:
                seen.add(u)
                order.append(u)
                queue.append(u)
    return order
