"""Deterministic constructors for the graph families and fixtures used in the checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError

KINDS = ("Gk", "Jl", "Tl", "P333", "Net", "Star", "Cycle", "Complete", "F1", "F2", "F3", "Fig5")


@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus its integer parameters.

    Parameter layout per kind: Gk (k,), Jl (l,), Tl (l,), Net (s1, s2, s3),
    Star/Cycle/Complete (n,), F1 (|Q1|..|Q5|), F2 (|R1|, |R2|, |R3|), F3 (|K|),
    P333 and Fig5 ().
    """

    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown family {self.kind!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        _validate(self)

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params))})"


_ARITY = {"Gk": 1, "Jl": 1, "Tl": 1, "P333": 0, "Net": 3, "Star": 1, "Cycle": 1,
          "Complete": 1, "F1": 5, "F2": 3, "F3": 1, "Fig5": 0}


def _validate(spec: FamilySpec) -> None:
    p = spec.params
    if len(p) != _ARITY[spec.kind]:
        raise GraphError(f"{spec.kind} takes {_ARITY[spec.kind]} parameters, got {len(p)}")
    kind = spec.kind
    bad = (
        (kind == "Gk" and p[0] < 3)
        or (kind == "Jl" and p[0] < 6)
        or (kind == "Tl" and p[0] < 2)
        or (kind == "Net" and min(p) < 1)
        or (kind == "Star" and p[0] < 1)
        or (kind == "Cycle" and p[0] < 3)
        or (kind == "Complete" and p[0] < 1)
        or (kind == "F1" and min(p) < 3)
        or (kind == "F2" and (p[0] < 3 or p[1] < 3 or p[2] < 2))
        or (kind == "F3" and p[0] < 3)
    )
    if bad:
        raise GraphError(f"parameters {p} out of range for {kind}")


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[int, str]
    spec: FamilySpec | None = None
    index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "index", {name: v for v, name in self.labels.items()})
        if len(self.index) != len(self.labels) or sorted(self.labels) != list(range(self.graph.n)):
            raise GraphError("labels must be a bijection onto the vertex ids")

    def __getitem__(self, name: str) -> int:
        return self.index[name]

    def ids(self, *names: str) -> list[int]:
        return [self.index[x] for x in names]

    def label_set(self, vertices) -> set[str]:
        return {self.labels[v] for v in vertices}


class _Builder:
    def __init__(self) -> None:
        self.names: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: set[tuple[int, int]] = set()

    def vertex(self, name: str) -> int:
        if name not in self.index:
            self.index[name] = len(self.names)
            self.names.append(name)
        return self.index[name]

    def join(self, a: str, b: str) -> None:
        u, v = self.vertex(a), self.vertex(b)
        if u == v:
            raise GraphError(f"loop at {a}")
        self.edges.add((min(u, v), max(u, v)))

    def clique(self, names: list[str]) -> None:
        for a, b in combinations(names, 2):
            self.join(a, b)

    def build(self, spec: FamilySpec | None) -> LabeledGraph:
        g = Graph.from_edges(len(self.names), sorted(self.edges))
        return LabeledGraph(g, dict(enumerate(self.names)), spec)


def make_Gk(k: int) -> LabeledGraph:
    spec = FamilySpec("Gk", (k,))
    b = _Builder()
    for i in range(1, k + 1):
        for x in "abc":
            b.vertex(f"{x}{i}")
    nxt = lambda i: i % k + 1  # noqa: E731
    for i in range(1, k + 1):
        j = nxt(i)
        # b_i b_{i+1} subdivided by a_{i+1}; a_i a_{i+1} subdivided by c_i; c-cycle
        b.join(f"b{i}", f"a{j}")
        b.join(f"a{j}", f"b{j}")
        b.join(f"a{i}", f"c{i}")
        b.join(f"c{i}", f"a{j}")
        b.join(f"c{i}", f"c{j}")
    return b.build(spec)


def _cyclic_distance(i: int, j: int, l: int) -> int:
    d = abs(i - j) % l
    return min(d, l - d)


def make_Jl(l: int) -> LabeledGraph:
    spec = FamilySpec("Jl", (l,))
    b = _Builder()
    hv = [f"v{i}" for i in range(1, l + 1)]
    for name in hv:
        b.vertex(name)
    for i, j in combinations(range(1, l + 1), 2):
        if _cyclic_distance(i, j, l) != 1:
            b.join(f"v{i}", f"v{j}")
    for i, j in combinations(range(1, l + 1), 2):
        if _cyclic_distance(i, j, l) <= 2:
            continue
        name = f"v_{{{i},{j}}}"
        b.vertex(name)
        for m in range(1, l + 1):
            if m not in (i, j):
                b.join(name, f"v{m}")
    return b.build(spec)


def make_Tl(l: int) -> LabeledGraph:
    spec = FamilySpec("Tl", (l,))
    b = _Builder()
    b.vertex("u")
    for i in (1, 2, 3):
        for j in range(1, l + 1):
            b.vertex(f"u_{{{i},{j}}}")
    for y in range(1, 5):
        b.vertex(f"y{y}")
    U = lambda i, j: f"u_{{{i},{j}}}"  # noqa: E731
    for i in (1, 2, 3):
        for j in range(1, l + 1):
            b.join("u", U(i, j))
    for j in range(1, l + 1):
        b.join("y1", U(1, j))
        b.join("y2", U(2, j))
        b.join("y3", U(2, j))
        b.join("y3", U(3, j))
        b.join("y4", U(3, j))
    for y1, y2 in ((1, 2), (2, 3), (3, 4), (4, 1)):
        b.join(f"y{y1}", f"y{y2}")
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            if i != j:
                b.join(U(1, i), U(2, j))
                b.join(U(1, i), U(3, j))
    return b.build(spec)


def make_P333() -> LabeledGraph:
    b = _Builder()
    for p in "uvw":
        for i in (1, 2, 3):
            b.vertex(f"{p}{i}")
        b.join(f"{p}1", f"{p}2")
        b.join(f"{p}2", f"{p}3")
    b.clique(["u1", "v1", "w1"])
    b.clique(["u3", "v3", "w3"])
    return b.build(FamilySpec("P333"))


def make_net(s1: int, s2: int, s3: int) -> LabeledGraph:
    spec = FamilySpec("Net", (s1, s2, s3))
    b = _Builder()
    ends = []
    for p, s in zip("uvw", (s1, s2, s3)):
        for i in range(1, s + 2):
            b.vertex(f"{p}{i}")
        for i in range(1, s + 1):
            b.join(f"{p}{i}", f"{p}{i + 1}")
        ends.append(f"{p}{s + 1}")
    b.clique(ends)
    return b.build(spec)


def make_star(n: int) -> LabeledGraph:
    b = _Builder()
    b.vertex("center")
    for i in range(1, n + 1):
        b.join("center", f"leaf{i}")
    return b.build(FamilySpec("Star", (n,)))


def make_cycle(n: int) -> LabeledGraph:
    b = _Builder()
    for i in range(n):
        b.join(f"v{i}", f"v{(i + 1) % n}")
    return b.build(FamilySpec("Cycle", (n,)))


def make_complete(n: int) -> LabeledGraph:
    b = _Builder()
    names = [f"v{i}" for i in range(n)]
    for x in names:
        b.vertex(x)
    b.clique(names)
    return b.build(FamilySpec("Complete", (n,)))


def make_F1(q1: int, q2: int, q3: int, q4: int, q5: int) -> LabeledGraph:
    """Five cliques; Q1..Q3 each share q_i with Q4 and z_i with Q5."""
    spec = FamilySpec("F1", (q1, q2, q3, q4, q5))
    b = _Builder()
    sizes = (q1, q2, q3)
    for i, size in enumerate(sizes, 1):
        members = [f"q{i}", f"z{i}"] + [f"Q{i}_{t}" for t in range(size - 2)]
        b.clique(members)
    b.clique(["q1", "q2", "q3"] + [f"Q4_{t}" for t in range(q4 - 3)])
    b.clique(["z1", "z2", "z3"] + [f"Q5_{t}" for t in range(q5 - 3)])
    return b.build(spec)


def make_F2(r1: int, r2: int, r3: int) -> LabeledGraph:
    """Triangles c1c2c3 and f1f2f3; cliques R1 ∋ c1,f1, R2 ∋ c2,f2, R3 ∋ c3,r; edge r f3."""
    spec = FamilySpec("F2", (r1, r2, r3))
    b = _Builder()
    b.clique(["c1", "c2", "c3"])
    b.clique(["f1", "f2", "f3"])
    b.clique(["c1", "f1"] + [f"R1_{t}" for t in range(r1 - 2)])
    b.clique(["c2", "f2"] + [f"R2_{t}" for t in range(r2 - 2)])
    b.clique(["c3", "r"] + [f"R3_{t}" for t in range(r3 - 2)])
    b.join("r", "f3")
    return b.build(spec)


def make_F3(k: int) -> LabeledGraph:
    """Six-cycle y1..y6 plus a clique K containing w, w' with w~y1,y6 and w'~y3,y4."""
    spec = FamilySpec("F3", (k,))
    b = _Builder()
    for i in range(1, 7):
        b.join(f"y{i}", f"y{i % 6 + 1}")
    b.clique(["w", "w'"] + [f"k{t}" for t in range(k - 2)])
    for a, c in (("w", "y1"), ("w", "y6"), ("w'", "y3"), ("w'", "y4")):
        b.join(a, c)
    return b.build(spec)


FIG5_EDGES = (
    ("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v2", "v5"), ("v4", "v8"), ("v3", "v6"),
    ("v3", "v7"), ("v5", "v6"), ("v6", "v7"), ("v7", "v8"), ("v9", "v5"), ("v9", "v8"),
)


def make_fig5() -> LabeledGraph:
    """The 9-vertex, 12-edge drawing read as an edge list (v1 leftmost, v5..v8 the vertical path)."""
    b = _Builder()
    for i in range(1, 10):
        b.vertex(f"v{i}")
    for a, c in FIG5_EDGES:
        b.join(a, c)
    return b.build(FamilySpec("Fig5"))


_MAKERS = {
    "Gk": make_Gk, "Jl": make_Jl, "Tl": make_Tl, "P333": make_P333, "Net": make_net,
    "Star": make_star, "Cycle": make_cycle, "Complete": make_complete,
    "F1": make_F1, "F2": make_F2, "F3": make_F3, "Fig5": make_fig5,
}


def build(spec: FamilySpec) -> LabeledGraph:
    return _MAKERS[spec.kind](*spec.params)


def order_of(spec: FamilySpec) -> int:
    """Vertex count of the family member without building it."""
    p = spec.params
    return {
        "Gk": lambda: 3 * p[0],
        "Jl": lambda: p[0] + p[0] * (p[0] - 3) // 2 - p[0],
        "Tl": lambda: 3 * p[0] + 5,
        "P333": lambda: 9,
        "Net": lambda: sum(p) + 3,
        "Star": lambda: p[0] + 1,
        "Cycle": lambda: p[0],
        "Complete": lambda: p[0],
        "F1": lambda: sum(p) - 6,
        "F2": lambda: 6 + (p[0] - 2) + (p[1] - 2) + (p[2] - 1),
        "F3": lambda: 6 + p[0],
        "Fig5": lambda: 9,
    }[spec.kind]()


def specs_of_order(kind: str, n: int) -> Iterator[FamilySpec]:
    """All parameter vectors of an F-class (or P333) whose member has exactly ``n`` vertices.

    Interchangeable blocks are enumerated once (Q1..Q3 non-increasing, Q4 >= Q5, R1 >= R2).
    """
    if kind == "P333":
        if n == 9:
            yield FamilySpec("P333")
    elif kind == "F3":
        if n - 6 >= 3:
            yield FamilySpec("F3", (n - 6,))
    elif kind == "F2":
        # n = r1 + r2 + r3 + 1
        for r3 in range(2, n):
            for r1 in range(3, n):
                r2 = n - 1 - r1 - r3
                if 3 <= r2 <= r1:
                    yield FamilySpec("F2", (r1, r2, r3))
    elif kind == "F1":
        total = n + 6
        for q1 in range(3, total):
            for q2 in range(3, q1 + 1):
                for q3 in range(3, q2 + 1):
                    rest = total - q1 - q2 - q3
                    for q4 in range(3, rest):
                        q5 = rest - q4
                        if 3 <= q5 <= q4:
                            yield FamilySpec("F1", (q1, q2, q3, q4, q5))
    else:
        raise GraphError(f"order enumeration not supported for {kind}")


FIXTURES: dict[str, FamilySpec] = {
    **{f"G{k}": FamilySpec("Gk", (k,)) for k in range(3, 9)},
    **{f"J{l}": FamilySpec("Jl", (l,)) for l in (6, 7, 8)},
    **{f"T{l}": FamilySpec("Tl", (l,)) for l in (2, 3, 4, 6)},
    "P333": FamilySpec("P333"),
    "Fig5": FamilySpec("Fig5"),
    "N111": FamilySpec("Net", (1, 1, 1)),
    "N122": FamilySpec("Net", (1, 2, 2)),
    "N113": FamilySpec("Net", (1, 1, 3)),
    "N333": FamilySpec("Net", (3, 3, 3)),
    "K13": FamilySpec("Star", (3,)),
    "K14": FamilySpec("Star", (4,)),
    "F1min": FamilySpec("F1", (3, 3, 3, 3, 3)),
    "F2min": FamilySpec("F2", (3, 3, 2)),
    "F3min": FamilySpec("F3", (3,)),
}
