"""Exact domination-type invariants with witnesses.

All searches work on bit-mask rows and an ``alive`` mask, so the invariant of
``G - v`` is computed on ``G`` with ``v`` masked out and the witness stays in
the original vertex ids.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits, mask_of, popcount, reach

KINDS = ("gamma", "gamma_c", "gamma_t", "alpha")
UNDEFINED = "undefined"


@dataclass(frozen=True)
class SolveResult:
    kind: str
    value: int | None  # None when the invariant is undefined for the input
    witness: frozenset[int]
    optimal: bool = True

    @property
    def defined(self) -> bool:
        return self.value is not None

    def display(self) -> str:
        return UNDEFINED if self.value is None else str(self.value)


def dominates(g: Graph, d: Iterable[int], x: Iterable[int] | None = None) -> bool:
    """True when every vertex of ``x`` (default: all) is in ``d`` or adjacent to it."""
    dm = mask_of(d)
    target = g.all_mask if x is None else mask_of(x)
    covered = dm
    for v in bits(dm):
        covered |= g.rows[v]
    return target & ~covered == 0


def dominates_connected(g: Graph, d: Iterable[int], x: Iterable[int] | None = None) -> bool:
    dm = mask_of(d)
    if not dm:
        return False
    return dominates(g, bits(dm), x) and reach(g.rows, dm & -dm, dm) == dm


def dominates_total(g: Graph, d: Iterable[int], x: Iterable[int] | None = None) -> bool:
    """Every vertex of ``x`` (default: all), members of ``d`` included, has a neighbour in ``d``."""
    dm = mask_of(d)
    target = g.all_mask if x is None else mask_of(x)
    covered = 0
    for v in bits(dm):
        covered |= g.rows[v]
    return target & ~covered == 0


def _greedy_cover(need: Sequence[int], universe: int, candidates: int) -> int | None:
    chosen = 0
    left = universe
    while left:
        best, best_cov = -1, 0
        for w in bits(candidates & ~chosen):
            cov = popcount(need[w] & left)
            if cov > best_cov:
                best, best_cov = w, cov
        if best < 0:
            return None
        chosen |= 1 << best
        left &= ~need[best]
    return chosen


def _cover_search(need: Sequence[int], universe: int, candidates: int, below: int) -> int | None:
    """Smallest ``D ⊆ candidates`` with ``need[x] & D`` non-empty for all ``x`` in ``universe``.

    ``need`` is symmetric (closed or open neighbourhoods), so ``need[w]`` is also
    the set that ``w`` covers.  Only sets of size ``< below`` are reported;
    returns ``None`` when no such set exists.
    """
    best = [below, None]
    greedy = _greedy_cover(need, universe, candidates)
    if greedy is not None and popcount(greedy) < best[0]:
        best[0], best[1] = popcount(greedy), greedy

    def rec(chosen: int, size: int, left: int, avail: int) -> None:
        if not left:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + 1 >= best[0]:
            return
        pick, pick_opts = -1, None
        for x in bits(left):
            opts = need[x] & avail
            if not opts:
                return
            c = popcount(opts)
            if pick_opts is None or c < popcount(pick_opts):
                pick, pick_opts = x, opts
                if c == 1:
                    break
        maxcov = 0
        for w in bits(avail):
            c = popcount(need[w] & left)
            if c > maxcov:
                maxcov = c
        if size + -(-popcount(left) // maxcov) >= best[0]:
            return
        for w in bits(pick_opts):
            rec(chosen | (1 << w), size + 1, left & ~need[w], avail)
            avail &= ~(1 << w)

    rec(0, 0, universe, candidates)
    return best[1]


def _connected_search(rows: Sequence[int], alive: int, below: int) -> int | None:
    """Smallest connected dominating set of ``G[alive]`` of size ``< below``.

    Sets are grown as connected subgraphs: each branch adds one frontier vertex
    and later siblings forbid it, so every connected set is generated once.
    """
    closed = [0] * len(rows)
    for v in bits(alive):
        closed[v] = (rows[v] | (1 << v)) & alive
    if popcount(alive) == 1:
        return alive if below > 1 else None
    best = [below, None]

    def rec(chosen: int, size: int, left: int, forbidden: int, dom: int) -> None:
        if not left:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + 1 >= best[0]:
            return
        allowed = alive & ~forbidden
        # distance bound: layers grown from the chosen set inside allowed vertices
        reached, cover, steps = chosen, dom, 0
        while left & ~cover:
            layer = 0
            for v in bits(reached):
                layer |= rows[v]
            layer &= allowed & ~reached
            if not layer:
                return
            reached |= layer
            for v in bits(layer):
                cover |= closed[v]
            steps += 1
        if size + steps >= best[0]:
            return
        frontier = 0
        for v in bits(chosen):
            frontier |= rows[v]
        frontier &= allowed & ~chosen
        maxcov = 0
        for w in bits(allowed & ~chosen):
            c = popcount(closed[w] & left)
            if c > maxcov:
                maxcov = c
        if maxcov == 0 or size + -(-popcount(left) // maxcov) >= best[0]:
            return
        order = sorted(bits(frontier), key=lambda w: (-popcount(closed[w] & left), w))
        for w in order:
            rec(chosen | (1 << w), size + 1, left & ~closed[w], forbidden, dom | closed[w])
            forbidden |= 1 << w

    # some vertex of N[u] lies in every dominating set; anchor on each in turn
    u = min(bits(alive), key=lambda v: (popcount(closed[v]), v))
    forbidden = 0
    for a in bits(closed[u]):
        rec(1 << a, 1, alive & ~closed[a], forbidden, closed[a])
        forbidden |= 1 << a
    return best[1]


def _max_independent(rows: Sequence[int], alive: int) -> int:
    best = [0, 0]

    def rec(chosen: int, size: int, cand: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + popcount(cand) <= best[0]:
            return
        # vertices of degree <= 1 in the candidate graph are always safe to take
        for v in bits(cand):
            if popcount(rows[v] & cand) <= 1:
                rec(chosen | (1 << v), size + 1, cand & ~rows[v] & ~(1 << v))
                return
        v = max(bits(cand), key=lambda x: (popcount(rows[x] & cand), -x))
        rec(chosen | (1 << v), size + 1, cand & ~rows[v] & ~(1 << v))
        rec(chosen, size, cand & ~(1 << v))

    rec(0, 0, alive)
    return best[1]


def min_dominating(rows: Sequence[int], alive: int, kind: str, below: int | None = None) -> int | None:
    """Minimum ``kind`` set of ``G[alive]`` as a mask, or ``None``.

    ``None`` means either the invariant is undefined on ``G[alive]`` or no set
    of size ``< below`` exists; callers that need to tell these apart check
    :func:`defined_on` first.
    """
    n_alive = popcount(alive)
    cap = n_alive + 1 if below is None else below
    if n_alive == 0:
        return 0 if cap > 0 else None
    if kind == "gamma":
        need = [(r | (1 << v)) & alive if alive >> v & 1 else 0 for v, r in enumerate(rows)]
        return _cover_search(need, alive, alive, cap)
    if kind == "gamma_t":
        need = [r & alive if alive >> v & 1 else 0 for v, r in enumerate(rows)]
        if any(not need[v] for v in bits(alive)):
            return None
        return _cover_search(need, alive, alive, cap)
    if kind == "gamma_c":
        if reach(rows, alive & -alive, alive) != alive:
            return None
        return _connected_search(rows, alive, cap)
    raise ValueError(f"unknown domination kind {kind!r}")


def defined_on(rows: Sequence[int], alive: int, kind: str) -> bool:
    if kind == "gamma_c":
        return not alive or reach(rows, alive & -alive, alive) == alive
    if kind == "gamma_t":
        return all(rows[v] & alive for v in bits(alive))
    return True


def solve(g: Graph, kind: str) -> SolveResult:
    if kind == "alpha":
        w = _max_independent(g.rows, g.all_mask)
        return SolveResult(kind, popcount(w), frozenset(bits(w)))
    if kind not in KINDS:
        raise ValueError(f"unknown invariant {kind!r}")
    if not defined_on(g.rows, g.all_mask, kind):
        return SolveResult(kind, None, frozenset())
    w = min_dominating(g.rows, g.all_mask, kind)
    return SolveResult(kind, popcount(w), frozenset(bits(w)))


def domination_number(g: Graph) -> SolveResult:
    return solve(g, "gamma")


def connected_domination_number(g: Graph) -> SolveResult:
    return solve(g, "gamma_c")


def total_domination_number(g: Graph) -> SolveResult:
    return solve(g, "gamma_t")


def independence_number(g: Graph) -> SolveResult:
    return solve(g, "alpha")


def satisfies(g: Graph, kind: str, d: Iterable[int]) -> bool:
    d = list(d)
    if kind == "gamma":
        return dominates(g, d)
    if kind == "gamma_c":
        return dominates_connected(g, d)
    if kind == "gamma_t":
        return dominates_total(g, d)
    if kind == "alpha":
        m = mask_of(d)
        return all(not g.rows[v] & m for v in d)
    raise ValueError(kind)
