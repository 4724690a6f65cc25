"""Hamiltonian and longest cycles, and the longest-cycle lemmas for claw-free graphs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph, bits, popcount, reach
from .solvers import _max_independent
from .structure import connectivity, find_claw

EXACT_LIMIT = 18
STRICT_LIMIT = 10


class InstanceTooLarge(ValueError):
    pass


class LemmaHypothesisError(ValueError):
    pass


# ---------------------------------------------------------------- Hamiltonian cycles

def _has_cut_vertex(rows: Sequence[int], alive: int) -> bool:
    for v in bits(alive):
        rest = alive & ~(1 << v)
        if rest and reach(rows, rest & -rest, rest) != rest:
            return True
    return False


def _greedy_independent(rows: Sequence[int], alive: int) -> int:
    chosen = 0
    while alive:
        v = min(bits(alive), key=lambda x: (popcount(rows[x] & alive), x))
        chosen |= 1 << v
        alive &= ~(rows[v] | (1 << v))
    return chosen


def hamiltonian_cycle(g: Graph) -> tuple[int, ...] | None:
    """A Hamiltonian cycle as a vertex sequence (start not repeated), or ``None``."""
    n = g.n
    if n < 3:
        return None
    return _cycle_through(g.rows, g.all_mask)


def _cycle_through(rows: Sequence[int], alive: int) -> tuple[int, ...] | None:
    """Backtracking for a cycle through exactly the vertices of ``alive``."""
    nv = popcount(alive)
    if nv < 3:
        return None
    r = [rows[v] & alive for v in range(len(rows))]
    if any(popcount(r[v]) < 2 for v in bits(alive)):
        return None
    if reach(r, alive & -alive, alive) != alive or _has_cut_vertex(r, alive):
        return None
    # an independent set larger than half the vertices cannot alternate along a cycle
    if 2 * popcount(_max_independent(r, alive)) > nv:
        return None
    # start at a vertex of minimum degree; its two cycle edges come from a small set
    start = min(bits(alive), key=lambda v: (popcount(r[v]), v))
    path = [start]

    def rec(end: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(r[end] >> start & 1)
        open_ends = unvisited | (1 << end) | (1 << start)
        forced = -1
        for w in bits(unvisited):
            avail = r[w] & open_ends
            c = popcount(avail)
            if c < 2:
                return False
            if c == 2 and end != start and avail >> end & 1 and unvisited != (1 << w):
                # w must be entered from end and leave by its other neighbour
                if forced >= 0:
                    return False
                forced = w
        if not r[start] & unvisited:
            return False
        rest = unvisited | (1 << end)
        if reach(r, 1 << end, rest) != rest:
            return False
        # independent vertices of the remaining path need two neighbours each
        # off the set; end and start contribute one slot apiece
        ind = _greedy_independent(r, unvisited)
        if popcount(ind) > popcount(unvisited) - popcount(ind) + 1:
            return False
        if forced >= 0:
            cands = [forced]
        else:
            cands = sorted(bits(r[end] & unvisited), key=lambda w: (popcount(r[w] & unvisited), w))
        for w in cands:
            path.append(w)
            if rec(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    if rec(start, alive & ~(1 << start)):
        return tuple(path)
    return None


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


def is_valid_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.adjacent(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


# ---------------------------------------------------------------- longest cycles

@dataclass(frozen=True)
class CycleOrientation:
    """A cycle with a fixed orientation: ``cycle[i + 1]`` is the successor of ``cycle[i]``."""

    cycle: tuple[int, ...]
    _pos: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.cycle)})

    def __len__(self) -> int:
        return len(self.cycle)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def succ(self, v: int, i: int = 1) -> int:
        return self.cycle[(self._pos[v] + i) % len(self.cycle)]

    def pred(self, v: int, i: int = 1) -> int:
        return self.cycle[(self._pos[v] - i) % len(self.cycle)]

    def segment(self, u: int, v: int) -> list[int]:
        """Vertices from ``u`` to ``v`` inclusive along the orientation."""
        i, j = self._pos[u], self._pos[v]
        length = (j - i) % len(self.cycle) + 1
        return [self.cycle[(i + t) % len(self.cycle)] for t in range(length)]

    def position(self, v: int) -> int:
        return self._pos[v]

    def order(self, vertices) -> list[int]:
        return sorted(vertices, key=self._pos.__getitem__)


def _longest_dfs(rows: Sequence[int], n: int) -> tuple[int, ...] | None:
    """Branch-and-bound over cycles whose smallest vertex is the start."""
    best: list = [2, None]
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        if popcount(allowed) + 1 <= best[0]:
            break
        path = [s]

        def rec(end: int, avail: int) -> None:
            if len(path) >= 3 and rows[end] >> s & 1 and len(path) > best[0]:
                best[0], best[1] = len(path), tuple(path)
            # only vertices still connected to the path end can extend it
            can = reach(rows, rows[end] & avail, avail)
            if len(path) + popcount(can) <= best[0]:
                return
            for w in bits(rows[end] & avail):
                path.append(w)
                rec(w, avail & ~(1 << w))
                path.pop()

        rec(s, allowed)
    return best[1]


def longest_cycle(g: Graph) -> CycleOrientation:
    if g.n > EXACT_LIMIT:
        raise InstanceTooLarge(f"instance too large for exact search (n={g.n} > {EXACT_LIMIT})")
    ham = hamiltonian_cycle(g)
    if ham is not None:
        return CycleOrientation(ham)
    cyc = _longest_dfs(g.rows, g.n)
    if cyc is None:
        raise ValueError("graph has no cycle")
    return CycleOrientation(cyc)


def longest_cycle_length_dp(g: Graph) -> int:
    """Longest cycle length by subset dynamic programming (0 if acyclic).

    ``ends[mask]`` holds the vertices at which a path can end that starts at the
    lowest vertex of ``mask`` and visits exactly ``mask``.
    """
    n = g.n
    rows = g.rows
    ends = [0] * (1 << n)
    best = 0
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        low = mask & -mask
        size = popcount(mask)
        if size >= 3 and size > best:
            lv = low.bit_length() - 1
            if rows[lv] & e:
                best = size
        for w in bits(~mask & ((1 << n) - 1) & ~(low - 1)):
            if rows[w] & e:
                ends[mask | (1 << w)] |= 1 << w
    return best


def all_longest_cycles(g: Graph) -> Iterator[CycleOrientation]:
    """Every longest cycle once (smallest vertex first, second vertex < last)."""
    if g.n > STRICT_LIMIT:
        raise InstanceTooLarge(f"cycle enumeration limited to n <= {STRICT_LIMIT}")
    length = len(longest_cycle(g))
    rows = g.rows
    n = g.n
    out = []
    for s in range(n):
        path = [s]

        def rec(end: int, avail: int) -> None:
            if len(path) == length:
                if rows[end] >> s & 1 and path[1] < path[-1]:
                    out.append(CycleOrientation(tuple(path)))
                return
            for w in bits(rows[end] & avail):
                path.append(w)
                rec(w, avail & ~(1 << w))
                path.pop()

        rec(s, ((1 << n) - 1) & ~((1 << (s + 1)) - 1))
    return iter(out)


# ---------------------------------------------------------------- longest-cycle lemmas

LEMMAS = ("L21", "L22", "Lh0", "Lh1", "Lh0n")
CLAW_FREE_LEMMAS = ("Lh0", "Lh1", "Lh0n")
PASS, FAIL, UNMET = "pass", "fail", "hypothesis unmet"


@dataclass
class ComponentCheck:
    component: frozenset[int]
    attachments: list[int]  # x_1..x_d in cyclic order
    results: dict[str, str]
    violations: dict[str, tuple] = field(default_factory=dict)


@dataclass
class CycleLemmaReport:
    cycle: CycleOrientation
    claw_free: bool
    components: list[ComponentCheck]

    @property
    def results(self) -> dict[str, str]:
        out = {}
        for lemma in LEMMAS:
            states = [c.results[lemma] for c in self.components]
            out[lemma] = FAIL if FAIL in states else (UNMET if UNMET in states else PASS)
        return out

    @property
    def passed(self) -> bool:
        return FAIL not in self.results.values()


def _check_component(g: Graph, c: CycleOrientation, comp: int, comps: list[int], claw_free: bool) -> ComponentCheck:
    rows = g.rows
    cyc_mask = 0
    for v in c.cycle:
        cyc_mask |= 1 << v
    attach = 0
    for v in bits(comp):
        attach |= rows[v]
    attach &= cyc_mask
    X = c.order(bits(attach))
    d = len(X)
    Xs = set(X)
    plus = [c.succ(x) for x in X]
    minus = [c.pred(x) for x in X]
    res: dict[str, str] = {}
    bad: dict[str, tuple] = {}

    hits = [v for v in plus + minus if v in Xs]
    res["L21"] = FAIL if hits else PASS
    if hits:
        bad["L21"] = tuple(hits)

    res["L22"] = PASS
    for side in (plus, minus):
        for a in range(d):
            for b in range(a + 1, d):
                u, v = side[a], side[b]
                if u == v:
                    continue
                joined = rows[u] >> v & 1
                via = next((h for h in comps if rows_touch(rows, h, u) and rows_touch(rows, h, v)), None)
                if joined or via is not None:
                    res["L22"] = FAIL
                    bad.setdefault("L22", (u, v, "edge" if joined else "path"))

    if not claw_free:
        for lemma in CLAW_FREE_LEMMAS:
            res[lemma] = UNMET
        return ComponentCheck(frozenset(bits(comp)), X, res, bad)

    res["Lh0"] = PASS
    for i, x in enumerate(X):
        if not rows[plus[i]] >> minus[i] & 1:
            res["Lh0"] = FAIL
            bad.setdefault("Lh0", (x, plus[i], minus[i]))

    res["Lh1"] = PASS
    for i, xi in enumerate(X):
        for j, xj in enumerate(X):
            if i == j:
                continue
            pairs = (
                (xi, c.succ(xj)), (xi, c.succ(xj, 2)), (c.succ(xi), c.succ(xj, 2)),
                (xi, c.pred(xj)), (xi, c.pred(xj, 2)), (c.pred(xi), c.pred(xj, 2)),
            )
            for a, b in pairs:
                if a != b and rows[a] >> b & 1:
                    res["Lh1"] = FAIL
                    bad.setdefault("Lh1", (xi, xj, a, b))

    res["Lh0n"] = PASS
    for i, x in enumerate(X):
        nxt = X[(i + 1) % d]
        # vertices strictly between x_i and x_{i+1}, i.e. |C[x_i^+, x_{i+1}^-]|
        gap = (c.position(nxt) - c.position(x)) % len(c) - 1
        if d == 1:
            gap = len(c) - 1
        if gap < 3:
            res["Lh0n"] = FAIL
            bad.setdefault("Lh0n", (x, nxt, gap))
    return ComponentCheck(frozenset(bits(comp)), X, res, bad)


def rows_touch(rows: Sequence[int], comp: int, v: int) -> bool:
    return bool(rows[v] & comp)


def check_cycle(g: Graph, c: CycleOrientation, claw_free: bool | None = None) -> CycleLemmaReport:
    """Evaluate the lemmas for one given longest cycle, every component of G - C."""
    if claw_free is None:
        claw_free = find_claw(g) is None
    rest = g.all_mask
    for v in c.cycle:
        rest &= ~(1 << v)
    comps = g.components(rest)
    return CycleLemmaReport(c, claw_free, [_check_component(g, c, h, comps, claw_free) for h in comps])


def verify_cycle_lemmas(g: Graph, strict: bool = False) -> CycleLemmaReport | list[CycleLemmaReport]:
    """Check the longest-cycle lemmas on a 2-connected non-Hamiltonian graph.

    Claw-containing inputs get L21/L22 only; the remaining lemmas are reported
    as "hypothesis unmet".  ``strict`` checks every longest cycle (n <= 10) and
    returns one report per cycle.
    """
    if g.n > EXACT_LIMIT:
        raise InstanceTooLarge(f"instance too large for exact search (n={g.n} > {EXACT_LIMIT})")
    if connectivity(g) < 2:
        raise LemmaHypothesisError("graph is not 2-connected")
    if is_hamiltonian(g):
        raise LemmaHypothesisError("Hamiltonian input")
    claw_free = find_claw(g) is None
    if strict:
        return [check_cycle(g, c, claw_free) for c in all_longest_cycles(g)]
    return check_cycle(g, longest_cycle(g), claw_free)
