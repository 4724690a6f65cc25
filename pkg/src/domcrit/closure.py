"""Local-completion closure of claw-free graphs and recognition of the exceptional classes."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import families
from .families import FamilySpec
from .graph import Graph, bits, reach
from .hamilton import is_hamiltonian
from .iso import is_isomorphic
from .structure import HypothesisUnmet, connectivity, find_claw, find_induced, pattern

ORDER_CHECK_LIMIT = 12


class ClosureError(RuntimeError):
    pass


@dataclass(frozen=True)
class ClosureResult:
    graph: Graph
    trace: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]  # (completed vertex, added edges)

    @property
    def added_edges(self) -> list[tuple[int, int]]:
        return [e for _, es in self.trace for e in es]


def _eligible(rows: list[int], x: int) -> bool:
    nb = rows[x]
    if not nb:
        return False
    if reach(rows, nb & -nb, nb) != nb:
        return False
    return not all((rows[v] | (1 << v)) & nb == nb for v in bits(nb))


def _complete_fixpoint(g: Graph, order: list[int]) -> ClosureResult:
    rows = list(g.rows)
    trace = []
    changed = True
    while changed:
        changed = False
        for x in order:
            if not _eligible(rows, x):
                continue
            nb = rows[x]
            added = []
            for u in bits(nb):
                missing = nb & ~rows[u] & ~(1 << u)
                for v in bits(missing):
                    if u < v:
                        added.append((u, v))
                rows[u] |= missing
            for u, v in added:
                rows[v] |= 1 << u
            trace.append((x, tuple(added)))
            changed = True
            break
    return ClosureResult(Graph._trusted(g.n, rows), tuple(trace))


def closure(g: Graph, check_order: bool | None = None) -> ClosureResult:
    """Repeat local completion at the lowest-id eligible vertex until none is eligible.

    A vertex is eligible when its neighbourhood induces a connected but
    non-complete graph.  For n <= 12 the result is recomputed with the reverse
    vertex order and must agree.
    """
    if find_claw(g) is not None:
        raise HypothesisUnmet("closure requires a claw-free graph")
    if not g.is_connected():
        raise HypothesisUnmet("closure requires a connected graph")
    result = _complete_fixpoint(g, list(range(g.n)))
    if check_order is None:
        check_order = g.n <= ORDER_CHECK_LIMIT
    if check_order:
        other = _complete_fixpoint(g, list(range(g.n - 1, -1, -1)))
        if other.graph != result.graph:
            raise ClosureError("local completion depends on the vertex order")
    return result


def is_closed(g: Graph) -> bool:
    rows = list(g.rows)
    return not any(_eligible(rows, x) for x in range(g.n))


@dataclass(frozen=True)
class ClassMembership:
    verdict: str  # "F1", "F2", "F3", "P333" or "none"
    spec: FamilySpec | None = None
    mapping: dict[int, int] = field(default_factory=dict)  # input vertex -> family vertex


CLASS_KINDS = ("P333", "F1", "F2", "F3")


def classify(g: Graph) -> ClassMembership:
    """Match ``g`` against every P333/F1/F2/F3 member with the same order (first match wins)."""
    degs = sorted(g.degrees())
    m = g.edge_count()
    for kind in CLASS_KINDS:
        for spec in families.specs_of_order(kind, g.n):
            member = families.build(spec).graph
            if member.edge_count() != m or sorted(member.degrees()) != degs:
                continue
            res = is_isomorphic(g, member)
            if res.isomorphic:
                return ClassMembership(kind, spec, res.mapping)
    return ClassMembership("none")


PUMM_PATTERNS = ("K13", "N122", "N113")


@dataclass(frozen=True)
class PummVerdict:
    holds: bool
    branch: int | None  # 1 Hamiltonian, 2 isomorphic to P333, 3 closure in F1/F2/F3
    detail: str = ""


def pumm_hypothesis(g: Graph) -> str | None:
    """Reason the hypothesis fails, or ``None`` when ``g`` is 2-connected and {K13, N122, N113}-free."""
    if connectivity(g) < 2:
        return "not 2-connected"
    if find_claw(g) is not None:
        return "contains K13"
    for name in PUMM_PATTERNS[1:]:
        if find_induced(g, pattern(name), name) is not None:
            return f"contains {name}"
    return None


def check_theorem_pumm(g: Graph) -> PummVerdict:
    reason = pumm_hypothesis(g)
    if reason is not None:
        raise HypothesisUnmet(reason)
    if is_hamiltonian(g):
        return PummVerdict(True, 1, "Hamiltonian")
    p333 = families.make_P333().graph
    if g.n == 9 and is_isomorphic(g, p333).isomorphic:
        return PummVerdict(True, 2, "isomorphic to P333")
    cl = closure(g).graph
    member = classify(cl)
    if member.verdict in ("F1", "F2", "F3"):
        return PummVerdict(True, 3, f"closure in {member.verdict} {member.spec}")
    return PummVerdict(False, None, f"non-Hamiltonian, not P333, closure class {member.verdict}")
