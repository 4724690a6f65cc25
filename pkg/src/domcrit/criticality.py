"""Vertex- and edge-criticality of domination invariants, with per-deletion witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, bits, popcount, reach
from .solvers import SolveResult, defined_on, min_dominating, solve

DOMINATION_KINDS = ("gamma", "gamma_c", "gamma_t")
EXHAUSTIVE_LIMIT = 10


class NotCritical(ValueError):
    pass


@dataclass
class CriticalityReport:
    kind: str
    mode: str  # "vertex" or "edge"
    k: int
    critical: bool
    base: SolveResult
    witnesses: dict = field(default_factory=dict)  # vertex or non-edge -> frozenset
    skipped: list[int] = field(default_factory=list)
    violation: tuple | None = None  # (vertex or non-edge, reason)

    @property
    def verdict(self) -> str:
        return "critical" if self.critical else "not-critical"


def support_vertices(g: Graph) -> frozenset[int]:
    """Vertices with a degree-one neighbour."""
    leaves = {v for v in range(g.n) if popcount(g.rows[v]) == 1}
    return frozenset(u for v in leaves for u in bits(g.rows[v]))


def _check_kind(kind: str) -> None:
    if kind not in DOMINATION_KINDS:
        raise ValueError(f"unknown domination kind {kind!r}")


def check_vertex_critical(g: Graph, kind: str, k: int | None = None, stop_early: bool = True) -> CriticalityReport:
    """Decide whether ``g`` is k-``kind``-vertex critical.

    ``k=None`` infers the order from the base graph.  With ``stop_early`` the
    scan stops at the first failing vertex; otherwise every vertex is examined.
    For ``gamma_t`` support vertices are exempt.
    """
    _check_kind(kind)
    base = solve(g, kind)
    if k is None:
        if not base.defined:
            return CriticalityReport(kind, "vertex", -1, False, base, violation=(None, "base invariant undefined"))
        k = base.value
    report = CriticalityReport(kind, "vertex", k, False, base)
    if base.value != k:
        report.violation = (None, f"base value {base.display()} != {k}")
        return report
    skip = support_vertices(g) if kind == "gamma_t" else frozenset()
    full = g.all_mask
    ok = True
    for v in range(g.n):
        if v in skip:
            report.skipped.append(v)
            continue
        alive = full & ~(1 << v)
        if not defined_on(g.rows, alive, kind):
            ok = False
            report.violation = report.violation or (v, "undefined after deletion")
        else:
            w = min_dominating(g.rows, alive, kind, below=k)
            if w is None:
                ok = False
                report.violation = report.violation or (v, f"value after deletion is not below {k}")
            else:
                report.witnesses[v] = frozenset(bits(w))
        if not ok and stop_early:
            break
    report.critical = ok
    return report


def check_edge_critical(g: Graph, kind: str, k: int | None = None, stop_early: bool = True) -> CriticalityReport:
    """Decide whether adding any missing edge drops ``kind`` below ``k`` (gamma and gamma_c only)."""
    if kind == "gamma_t":
        raise ValueError("edge criticality is only supported for gamma and gamma_c")
    _check_kind(kind)
    if g.is_complete():
        raise ValueError("edge criticality needs a non-complete graph")
    base = solve(g, kind)
    if k is None:
        k = base.value if base.defined else -1
    report = CriticalityReport(kind, "edge", k, False, base)
    if base.value != k:
        report.violation = (None, f"base value {base.display()} != {k}")
        return report
    ok = True
    for u, v in g.non_edges():
        rows = list(g.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        if not defined_on(rows, g.all_mask, kind):
            ok = False
            report.violation = report.violation or ((u, v), "undefined after addition")
        else:
            w = min_dominating(rows, g.all_mask, kind, below=k)
            if w is None:
                ok = False
                report.violation = report.violation or ((u, v), f"value after addition is not below {k}")
            else:
                report.witnesses[(u, v)] = frozenset(bits(w))
        if not ok and stop_early:
            break
    report.critical = ok
    return report


def all_minimum_sets(g: Graph, kind: str, alive: int | None = None) -> list[frozenset[int]]:
    """Every minimum ``kind`` set of ``G[alive]`` by enumeration (n <= 10)."""
    alive = g.all_mask if alive is None else alive
    if popcount(alive) > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration limited to {EXHAUSTIVE_LIMIT} vertices")
    if not defined_on(g.rows, alive, kind):
        return []
    best = min_dominating(g.rows, alive, kind)
    size = popcount(best)
    verts = list(bits(alive))
    out = []
    for combo in combinations(verts, size):
        m = 0
        for v in combo:
            m |= 1 << v
        if _is_kind_set(g.rows, alive, kind, m):
            out.append(frozenset(combo))
    return out


def _is_kind_set(rows, alive: int, kind: str, m: int) -> bool:
    cover = 0
    for v in bits(m):
        cover |= rows[v]
    if kind == "gamma":
        return alive & ~(cover | m) == 0
    if kind == "gamma_t":
        return alive & ~cover == 0
    if kind == "gamma_c":
        return alive & ~(cover | m) == 0 and m != 0 and reach(rows, m & -m, m) == m
    raise ValueError(kind)


@dataclass
class DvFact:
    vertex: int
    passed: bool
    reason: str = ""


def verify_Dv_facts(g: Graph, kind: str, k: int, exhaustive: bool | None = None) -> list[DvFact]:
    """Per-vertex structural facts of a verified vertex-critical graph.

    gamma: every witness D_v of G - v has k - 1 vertices, none adjacent to v
    (all minimum sets when ``exhaustive``, default for n <= 10).
    gamma_c: the connected domination number of G - v is exactly k - 1.
    """
    if kind not in ("gamma", "gamma_c"):
        raise ValueError("facts are stated for gamma and gamma_c only")
    report = check_vertex_critical(g, kind, k)
    if not report.critical:
        raise NotCritical(f"graph is not {k}-{kind}-vertex critical: {report.violation}")
    if exhaustive is None:
        exhaustive = g.n - 1 <= EXHAUSTIVE_LIMIT
    out = []
    for v in range(g.n):
        alive = g.all_mask & ~(1 << v)
        if kind == "gamma_c":
            size = popcount(min_dominating(g.rows, alive, kind))
            out.append(DvFact(v, size == k - 1, f"gamma_c(G-v) = {size}"))
            continue
        sets = all_minimum_sets(g, kind, alive) if exhaustive else [report.witnesses[v]]
        bad = [d for d in sets if len(d) != k - 1 or g.rows[v] & sum(1 << x for x in d)]
        reason = f"{len(sets)} minimum set(s) checked"
        if bad:
            reason += f"; violating set {sorted(bad[0])}"
        out.append(DvFact(v, not bad, reason))
    return out
