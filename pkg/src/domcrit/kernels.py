"""Compiled uint64 kernels for catalog scans (n <= 16).

Each graph is a row of 64-bit adjacency words.  The kernels are used as a
fast path by :mod:`domcrit.scan`; anything they flag as a failure, and
anything they defer, is re-decided by the pure-Python library.
"""
from __future__ import annotations

import numpy as np
from numba import njit

FAST_MAX_N = 16

# decode status
OK, BAD, BLANK, TOO_BIG = 0, 1, 2, 3
# kind codes
GAMMA, GAMMA_C, GAMMA_T = 0, 1, 2
KIND_CODES = {"gamma": GAMMA, "gamma_c": GAMMA_C, "gamma_t": GAMMA_T}
# per-theorem status
UNMET, HOLDS, FAILS, DEFER = 0, 1, 2, 3

_ONE = np.uint64(1)
_ZERO = np.uint64(0)


@njit(cache=True)
def _bit(v):
    return np.uint64(1) << np.uint64(v)


@njit(cache=True)
def _low(x):
    # index of the lowest set bit
    i = 0
    while not (x >> np.uint64(i)) & np.uint64(1):
        i += 1
    return i


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True)
def decode_lines(buf, starts, lens, max_n):
    """Decode graph6 records ``buf[starts[i]:starts[i]+lens[i]]``.

    Returns ``(n, adj, status)``; ``adj`` has ``max(max_n, 1)`` words per
    record and records with more than ``max_n`` vertices get TOO_BIG.
    """
    count = starts.shape[0]
    ns = np.zeros(count, np.int32)
    adj = np.zeros((count, max(max_n, 1)), np.uint64)
    status = np.zeros(count, np.int8)
    for r in range(count):
        s = starts[r]
        e = s + lens[r]
        while s < e and (buf[s] == 32 or buf[s] == 9 or buf[s] == 13):
            s += 1
        while e > s and (buf[e - 1] == 32 or buf[e - 1] == 9 or buf[e - 1] == 13):
            e -= 1
        if s == e:
            status[r] = BLANK
            continue
        n = int(buf[s]) - 63
        if n < 0 or n > 62:
            status[r] = BAD if n < 0 or buf[s] != 126 else TOO_BIG
            continue
        if n > max_n:
            status[r] = TOO_BIG
            continue
        nbits = n * (n - 1) // 2
        need = (nbits + 5) // 6
        if e - s - 1 != need:
            status[r] = BAD
            continue
        k = 0
        i = 0
        j = 1
        bad = False
        for p in range(s + 1, e):
            val = int(buf[p]) - 63
            if val < 0 or val > 63:
                bad = True
                break
            for sh in range(5, -1, -1):
                bit = (val >> sh) & 1
                if k >= nbits:
                    if bit:
                        bad = True
                    continue
                if bit:
                    adj[r, i] |= _bit(j)
                    adj[r, j] |= _bit(i)
                k += 1
                i += 1
                if i == j:
                    i = 0
                    j += 1
        if bad:
            status[r] = BAD
            adj[r, :] = 0
            continue
        ns[r] = n
    return ns, adj, status


@njit(cache=True)
def reach(adj, start, alive):
    seen = start & alive
    frontier = seen
    while frontier:
        nxt = _ZERO
        f = frontier
        while f:
            v = _low(f)
            f &= f - _ONE
            nxt |= adj[v]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@njit(cache=True)
def is_connected(adj, alive):
    if alive == 0:
        return True
    return reach(adj, alive & (~alive + _ONE), alive) == alive


@njit(cache=True)
def count_components(adj, alive):
    c = 0
    while alive:
        alive &= ~reach(adj, alive & (~alive + _ONE), alive)
        c += 1
    return c


@njit(cache=True)
def _full(n):
    if n == 64:
        return ~_ZERO
    return (_ONE << np.uint64(n)) - _ONE


@njit(cache=True)
def claw_free(adj, n):
    for c in range(n):
        nb = adj[c]
        x = nb
        while x:
            a = _low(x)
            x &= x - _ONE
            rest = nb & ~adj[a] & ~((_bit(a) << _ONE) - _ONE)
            y = rest
            while y:
                b = _low(y)
                y &= y - _ONE
                if rest & ~adj[b] & ~((_bit(b) << _ONE) - _ONE):
                    return False
    return True


@njit(cache=True)
def _next_comb(idx, s, m):
    # advance a sorted s-combination of range(m); False when exhausted
    i = s - 1
    while i >= 0 and idx[i] == m - s + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, s):
        idx[j] = idx[j - 1] + 1
    return True


@njit(cache=True)
def kappa_at_least(adj, n, k):
    """True when removing fewer than ``k`` vertices never disconnects the graph (and n - 1 >= k)."""
    if n - 1 < k:
        return False
    full = _full(n)
    idx = np.zeros(max(k, 1), np.int64)
    for s in range(0, k):
        for i in range(s):
            idx[i] = i
        while True:
            cut = _ZERO
            for i in range(s):
                cut |= _bit(idx[i])
            if not is_connected(adj, full & ~cut):
                return False
            if s == 0 or not _next_comb(idx, s, n):
                break
    return True


@njit(cache=True)
def _is_kind_set(adj, alive, mask, kind):
    cover = _ZERO
    x = mask
    while x:
        v = _low(x)
        x &= x - _ONE
        cover |= adj[v]
    if kind == GAMMA:
        return alive & ~(cover | mask) == 0
    if kind == GAMMA_T:
        return alive & ~cover == 0
    if alive & ~(cover | mask) != 0 or mask == 0:
        return False
    return reach(adj, mask & (~mask + _ONE), mask) == mask


@njit(cache=True)
def exists_set(adj, alive, kind, s):
    """Is there a ``kind`` set of ``G[alive]`` with at most ``s`` vertices?

    All three kinds are closed under adding a vertex (for connected sets,
    when ``G[alive]`` is connected), so only size ``min(s, |alive|)`` is tried.
    """
    verts = np.empty(64, np.int64)
    m = 0
    for v in range(64):
        if (alive >> np.uint64(v)) & _ONE:
            verts[m] = v
            m += 1
    if s > m:
        s = m
    if s <= 0:
        return m == 0
    idx = np.empty(s, np.int64)
    for i in range(s):
        idx[i] = i
    while True:
        mask = _ZERO
        for i in range(s):
            mask |= _bit(verts[idx[i]])
        if _is_kind_set(adj, alive, mask, kind):
            return True
        if not _next_comb(idx, s, m):
            return False


@njit(cache=True)
def _defined(adj, alive, kind):
    if kind == GAMMA_C:
        return is_connected(adj, alive)
    if kind == GAMMA_T:
        x = alive
        while x:
            v = _low(x)
            x &= x - _ONE
            if adj[v] & alive == 0:
                return False
    return True


@njit(cache=True)
def value_equals(adj, alive, kind, k):
    if not _defined(adj, alive, kind):
        return False
    return (not exists_set(adj, alive, kind, k - 1)) and exists_set(adj, alive, kind, k)


@njit(cache=True)
def vertex_critical(adj, n, kind, k):
    full = _full(n)
    if not value_equals(adj, full, kind, k):
        return False
    support = _ZERO
    if kind == GAMMA_T:
        for v in range(n):
            if _popcount(adj[v]) == 1:
                support |= adj[v]
    for v in range(n):
        if (support >> np.uint64(v)) & _ONE:
            continue
        alive = full & ~_bit(v)
        if not _defined(adj, alive, kind):
            return False
        if not exists_set(adj, alive, kind, k - 1):
            return False
    return True


DFS_NODE_LIMIT = 1000


@njit(cache=True)
def _hamiltonian_dfs(adj, n, limit):
    """Path search from vertex 0: 1 found, 0 none, -1 node limit reached."""
    for v in range(n):
        if _popcount(adj[v]) < 2:
            return 0
    path = np.zeros(64, np.int64)
    cand = np.zeros(64, np.uint64)
    full = _full(n)
    visited = _ONE
    cand[1] = adj[0] & ~_ONE
    d = 1
    nodes = 0
    while d > 0:
        c = cand[d]
        if c == 0:
            d -= 1
            if d == 0:
                break
            visited &= ~_bit(path[d])
            continue
        u = _low(c)
        cand[d] = c & (c - _ONE)
        nodes += 1
        if nodes > limit:
            return -1
        path[d] = u
        visited |= _bit(u)
        if d == n - 1:
            if adj[u] & _ONE:
                return 1
            visited &= ~_bit(u)
            continue
        # every unvisited vertex still needs two usable neighbours
        rest = full & ~visited
        usable = rest | _bit(u) | _ONE
        ok = True
        x = rest
        while x:
            w = _low(x)
            x &= x - _ONE
            if _popcount(adj[w] & usable) < 2:
                ok = False
                break
        if not ok:
            visited &= ~_bit(u)
            continue
        d += 1
        cand[d] = adj[u] & ~visited
    return 0


@njit(cache=True)
def hamiltonian(adj, n, ends):
    """Bounded DFS, then the subset DP when the DFS gives up."""
    if n < 3:
        return False
    r = _hamiltonian_dfs(adj, n, DFS_NODE_LIMIT)
    if r >= 0:
        return r == 1
    return hamiltonian_dp(adj, n, ends)


@njit(cache=True)
def hamiltonian_dp(adj, n, ends):
    """Subset DP over paths from vertex 0; ``ends`` needs ``2**(n-1)`` words."""
    if n < 3:
        return False
    size = 1 << (n - 1)
    for i in range(size):
        ends[i] = 0
    x = adj[0]
    while x:
        v = _low(x)
        x &= x - _ONE
        ends[1 << (v - 1)] |= _bit(v)
    last = size - 1
    for mask in range(1, size):
        e = ends[mask]
        if e == 0:
            continue
        if mask == last:
            break
        used = (np.uint64(mask) << _ONE) | _ONE
        while e:
            v = _low(e)
            e &= e - _ONE
            ext = adj[v] & ~used
            while ext:
                u = _low(ext)
                ext &= ext - _ONE
                ends[mask | (1 << (u - 1))] |= _bit(u)
    return ends[last] & adj[0] != 0


@njit(cache=True)
def violating_cut(adj, n, max_size):
    """Is there S with |S| <= max_size whose removal leaves more than max(1, |S|) components?"""
    full = _full(n)
    top = min(max_size, n - 2)
    idx = np.zeros(max(top, 1), np.int64)
    for s in range(0, top + 1):
        for i in range(s):
            idx[i] = i
        while True:
            cut = _ZERO
            for i in range(s):
                cut |= _bit(idx[i])
            c = count_components(adj, full & ~cut)
            if c > 1 and c > s:
                return True
            if s == 0 or not _next_comb(idx, s, n):
                break
    return False


# ---------------------------------------------------------------- theorem batches

@njit(cache=True)
def _ham_conclusion(adj, n, ends):
    return HOLDS if hamiltonian(adj, n, ends) else FAILS


@njit(cache=True)
def scan_batch(theorem, ns, adj, status, max_cut):
    """Per-graph status for ``theorem`` (see ``THEOREM_CODES``); undecodable rows get DEFER."""
    count = ns.shape[0]
    out = np.zeros(count, np.int8)
    ends = np.zeros(1 << (FAST_MAX_N - 1), np.uint64)
    for r in range(count):
        if status[r] != OK:
            out[r] = DEFER
            continue
        n = ns[r]
        a = adj[r]
        if theorem == 0:  # A
            if kappa_at_least(a, n, 2) and claw_free(a, n) and vertex_critical(a, n, GAMMA, 3):
                out[r] = _ham_conclusion(a, n, ends)
        elif theorem == 1:  # M
            if kappa_at_least(a, n, 2) and claw_free(a, n) and vertex_critical(a, n, GAMMA_C, 3):
                out[r] = _ham_conclusion(a, n, ends)
        elif theorem == 2:  # W
            if kappa_at_least(a, n, 3) and claw_free(a, n):
                if vertex_critical(a, n, GAMMA_C, 4) or vertex_critical(a, n, GAMMA_C, 5):
                    out[r] = _ham_conclusion(a, n, ends)
        elif theorem == 3:  # mike
            if kappa_at_least(a, n, 2):
                c = vertex_critical(a, n, GAMMA_C, 4)
                t = vertex_critical(a, n, GAMMA_T, 4)
                out[r] = HOLDS if c == t else FAILS
        elif theorem == 4:  # pumm: trichotomy branches need the library
            if kappa_at_least(a, n, 2) and claw_free(a, n):
                out[r] = DEFER
        elif theorem == 5:  # Ch-soundness
            if hamiltonian(a, n, ends):
                out[r] = FAILS if violating_cut(a, n, max_cut) else HOLDS
    return out


@njit(cache=True)
def lemma_targets(ns, adj, status):
    """Rows that are 2-connected, claw-free and non-Hamiltonian."""
    count = ns.shape[0]
    out = np.zeros(count, np.bool_)
    ends = np.zeros(1 << (FAST_MAX_N - 1), np.uint64)
    for r in range(count):
        if status[r] != OK:
            continue
        n = ns[r]
        a = adj[r]
        if n >= 3 and kappa_at_least(a, n, 2) and claw_free(a, n) and not hamiltonian(a, n, ends):
            out[r] = True
    return out


THEOREM_CODES = {"A": 0, "M": 1, "W": 2, "mike": 3, "pumm": 4, "Ch-soundness": 5}


def rows_of(g) -> np.ndarray:
    """64-word adjacency array for a library :class:`~domcrit.graph.Graph` with n <= 64."""
    if g.n > 64:
        raise ValueError("kernels handle at most 64 vertices")
    out = np.zeros(64, np.uint64)
    for v, r in enumerate(g.rows):
        out[v] = r
    return out
