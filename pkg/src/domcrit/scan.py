"""Theorem scans over graph6 streams.

Records are split and decoded in bulk; the compiled kernels settle the common
cases and everything they flag or defer is re-decided by the library
evaluators in :mod:`domcrit.theorems`, each under a per-graph time budget.
Rows are always produced in input order, also with several workers.
"""
from __future__ import annotations

import multiprocessing
import signal
import threading
import time
from dataclasses import dataclass, field
from functools import partial
from typing import IO, Callable, Iterator

import numpy as np

from . import graph6, kernels
from .graph import Graph
from .theorems import DEFAULT_MAX_CUT, FAILS, HOLDS, MAX_CUT_CAP, THEOREMS, UNMET, evaluate

UNDECIDED = "undecided"
DECODE_ERROR = "decode-error"
ROW_MODES = ("failures", "hits", "all")
FAST_STATUS = {kernels.UNMET: UNMET, kernels.HOLDS: HOLDS, kernels.FAILS: FAILS}
# kernel "holds" is re-checked by the library for theorems whose hits are rare
REVERIFY_HOLDS = frozenset({"A", "M", "W"})
CHUNK_BYTES = 1 << 20
_HEADER = graph6.HEADER.encode()


class BudgetExceeded(Exception):
    pass


@dataclass
class ScanConfig:
    theorems: tuple[str, ...] = ("A",)
    jobs: int = 1
    budget: float = 10.0  # seconds per graph and theorem
    strict: bool = False  # library re-checks every kernel verdict
    offset: int = 0
    max_cut_size: int = DEFAULT_MAX_CUT
    fastpath: bool = True
    rows: str = "failures"
    chunk_bytes: int = CHUNK_BYTES

    def __post_init__(self):
        self.theorems = tuple(self.theorems)
        if not self.theorems:
            raise ValueError("no theorem selected")
        for t in self.theorems:
            if t not in THEOREMS:
                raise ValueError(f"unknown theorem {t!r}; choose from {', '.join(THEOREMS)}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not self.budget > 0:
            raise ValueError("budget must be positive")
        if self.offset < 0:
            raise ValueError("offset must be non-negative")
        if not 0 <= self.max_cut_size <= MAX_CUT_CAP:
            raise ValueError(f"max cut size must be within 0..{MAX_CUT_CAP}")
        if self.rows not in ROW_MODES:
            raise ValueError(f"rows must be one of {', '.join(ROW_MODES)}")


@dataclass(frozen=True)
class Row:
    index: int
    graph6: str
    n: int | None
    theorem: str | None  # None for decode errors
    status: str
    reason: str

    def as_dict(self) -> dict:
        record = "error" if self.status == DECODE_ERROR else "graph"
        return {"record": record, "index": self.index, "graph6": self.graph6, "n": self.n,
                "theorem": self.theorem, "status": self.status, "reason": self.reason}


def _order_stats() -> dict[str, int]:
    return {"scanned": 0, "hypothesis_hits": 0, "counterexamples": 0, "undecided": 0}


@dataclass
class TheoremVerdict:
    theorem: str
    scanned: int = 0
    hypothesis_hits: int = 0
    counterexamples: list[tuple[int, str, str]] = field(default_factory=list)
    undecided: list[tuple[int, str, str]] = field(default_factory=list)
    decode_errors: int = 0
    elapsed: float = 0.0
    by_order: dict[int, dict[str, int]] = field(default_factory=dict)
    fastpath_mismatches: list[tuple[int, str, str]] = field(default_factory=list)

    def _bump(self, n: int, key: str, amount: int = 1) -> None:
        self.by_order.setdefault(n, _order_stats())[key] += amount

    def as_dict(self) -> dict:
        return {
            "record": "summary",
            "theorem": self.theorem,
            "scanned": self.scanned,
            "hypothesis_hits": self.hypothesis_hits,
            "counterexamples": [list(c) for c in self.counterexamples],
            "undecided": [list(u) for u in self.undecided],
            "decode_errors": self.decode_errors,
            "elapsed": round(self.elapsed, 3),
            "by_order": {str(n): dict(s) for n, s in sorted(self.by_order.items())},
            "fastpath_mismatches": [list(m) for m in self.fastpath_mismatches],
        }


@dataclass
class ScanReport:
    verdicts: dict[str, TheoremVerdict]
    decode_errors: list[tuple[int, str, str]] = field(default_factory=list)
    records: int = 0
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        if any(v.counterexamples for v in self.verdicts.values()):
            return 1
        if self.decode_errors:
            return 2
        return 0


# ---------------------------------------------------------------- record splitting

@dataclass
class _Chunk:
    data: bytes
    starts: np.ndarray
    lens: np.ndarray
    first_index: int


def _split(data: bytes) -> tuple[np.ndarray, np.ndarray]:
    """Start offsets and lengths of the non-blank lines of ``data``."""
    arr = np.frombuffer(data, np.uint8)
    nl = np.flatnonzero(arr == 10)
    if not len(data) or data[-1] != 10:
        nl = np.append(nl, len(data))
    starts = np.empty(len(nl), np.int64)
    if len(nl):
        starts[0] = 0
        starts[1:] = nl[:-1] + 1
    lens = nl - starts
    ink = ~np.isin(arr, (9, 10, 13, 32))
    csum = np.concatenate(([0], np.cumsum(ink, dtype=np.int64)))
    keep = csum[starts + lens] - csum[starts] > 0
    return starts[keep], lens[keep]


def iter_chunks(stream: IO[bytes], chunk_bytes: int = CHUNK_BYTES, offset: int = 0) -> Iterator[_Chunk]:
    """Cut a binary graph6 stream into record chunks, dropping the header and the first ``offset`` records."""
    index = 0
    carry = b""
    first = True
    while True:
        block = stream.read(chunk_bytes)
        data = carry + block
        if block:
            cut = data.rfind(b"\n")
            if cut < 0:
                carry = data
                continue
            carry, data = data[cut + 1:], data[:cut + 1]
        else:
            carry = b""
        if first and data.lstrip().startswith(_HEADER):
            data = data.lstrip()[len(_HEADER):]
        if first and data:
            first = False
        if b"\n" + _HEADER in data:
            data = data.replace(b"\n" + _HEADER, b"\n")
        if data:
            starts, lens = _split(data)
            count = len(starts)
            skip = min(max(offset - index, 0), count)
            if skip < count:
                yield _Chunk(data, starts[skip:], lens[skip:], index + skip)
            index += count
        if not block:
            return


# ---------------------------------------------------------------- evaluation

def _alarm(signum, frame):
    raise BudgetExceeded()


def _with_budget(fn: Callable[[], tuple[str, str]], budget: float) -> tuple[str, str]:
    if threading.current_thread() is not threading.main_thread():
        return fn()
    old = signal.signal(signal.SIGALRM, _alarm)
    signal.setitimer(signal.ITIMER_REAL, budget)
    try:
        return fn()
    except BudgetExceeded:
        return UNDECIDED, f"time budget of {budget:g}s exhausted"
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass
class _ChunkResult:
    rows: list[Row]
    verdicts: dict[str, TheoremVerdict]
    decode_errors: list[tuple[int, str, str]]
    records: int


def _process(chunk: _Chunk, config: ScanConfig) -> _ChunkResult:
    buf = np.frombuffer(chunk.data, np.uint8)
    max_n = kernels.FAST_MAX_N if config.fastpath else 0
    ns, adj, st = kernels.decode_lines(buf, chunk.starts, chunk.lens, max_n)
    count = len(ns)
    verdicts = {t: TheoremVerdict(t) for t in config.theorems}
    events: list[tuple[int, int, Row]] = []
    errors: list[tuple[int, str, str]] = []

    def line(pos: int) -> str:
        s = chunk.starts[pos]
        return chunk.data[s:s + chunk.lens[pos]].decode("ascii", "replace").strip()

    fast = st == kernels.OK
    library_graphs: dict[int, Graph] = {}
    for pos in np.flatnonzero(~fast):
        text = line(pos)
        try:
            library_graphs[pos] = graph6.decode(text)
        except graph6.Graph6Error as exc:
            idx = chunk.first_index + int(pos)
            errors.append((idx, text, str(exc)))
            events.append((int(pos), -1, Row(idx, text, None, None, DECODE_ERROR, str(exc))))

    decodable = fast.copy()
    decodable[list(library_graphs)] = True
    for t_order, theorem in enumerate(config.theorems):
        verdict = verdicts[theorem]
        verdict.decode_errors = len(errors)
        if config.fastpath and count:
            codes = kernels.scan_batch(kernels.THEOREM_CODES[theorem], ns, adj, st, config.max_cut_size)
        else:
            codes = np.full(count, kernels.DEFER, np.int8)
        need = (codes == kernels.FAILS) | (codes == kernels.DEFER)
        if theorem in REVERIFY_HOLDS or config.strict:
            need |= codes == kernels.HOLDS
        if config.strict:
            need |= fast
        need &= decodable

        # kernel verdicts taken as final
        trusted = fast & ~need
        for n in np.unique(ns[trusted]):
            sel = trusted & (ns == n)
            verdict._bump(int(n), "scanned", int(sel.sum()))
            verdict._bump(int(n), "hypothesis_hits", int((sel & (codes == kernels.HOLDS)).sum()))
        verdict.scanned += int(trusted.sum())
        verdict.hypothesis_hits += int((trusted & (codes == kernels.HOLDS)).sum())
        if config.rows != "failures":
            show = trusted & (codes == kernels.HOLDS) if config.rows == "hits" else trusted
            for pos in np.flatnonzero(show):
                status = FAST_STATUS[int(codes[pos])]
                why = "kernel verdict"
                events.append((int(pos), t_order, Row(chunk.first_index + int(pos), line(pos),
                                                      int(ns[pos]), theorem, status, why)))

        for pos in np.flatnonzero(need):
            pos = int(pos)
            idx = chunk.first_index + pos
            text = line(pos)
            if pos in library_graphs:
                g = library_graphs[pos]
            else:
                rows = [int(w) for w in adj[pos, :ns[pos]]]
                g = Graph._trusted(int(ns[pos]), rows)
            status, reason = _with_budget(partial(evaluate, theorem, g, config.max_cut_size), config.budget)
            code = int(codes[pos])
            if code in FAST_STATUS and FAST_STATUS[code] != status and status != UNDECIDED:
                verdict.fastpath_mismatches.append((idx, text, f"kernel {FAST_STATUS[code]}, library {status}"))
            verdict.scanned += 1
            verdict._bump(g.n, "scanned")
            if status in (HOLDS, FAILS):
                verdict.hypothesis_hits += 1
                verdict._bump(g.n, "hypothesis_hits")
            if status == FAILS:
                verdict.counterexamples.append((idx, text, reason))
                verdict._bump(g.n, "counterexamples")
            elif status == UNDECIDED:
                verdict.undecided.append((idx, text, reason))
                verdict._bump(g.n, "undecided")
            show = (status in (FAILS, UNDECIDED) or config.rows == "all"
                    or (config.rows == "hits" and status == HOLDS))
            if show:
                events.append((pos, t_order, Row(idx, text, g.n, theorem, status, reason)))

    events.sort(key=lambda e: (e[0], e[1]))
    return _ChunkResult([e[2] for e in events], verdicts, errors, count)


def _merge(total: TheoremVerdict, part: TheoremVerdict) -> None:
    total.scanned += part.scanned
    total.hypothesis_hits += part.hypothesis_hits
    total.counterexamples.extend(part.counterexamples)
    total.undecided.extend(part.undecided)
    total.decode_errors += part.decode_errors
    total.fastpath_mismatches.extend(part.fastpath_mismatches)
    for n, stats in part.by_order.items():
        mine = total.by_order.setdefault(n, _order_stats())
        for key, val in stats.items():
            mine[key] += val


def run_scan(stream: IO[bytes], config: ScanConfig, emit: Callable[[Row], None] | None = None) -> ScanReport:
    """Scan a binary graph6 stream; ``emit`` receives report rows in input order."""
    start = time.perf_counter()
    report = ScanReport({t: TheoremVerdict(t) for t in config.theorems})
    chunks = iter_chunks(stream, config.chunk_bytes, config.offset)
    work = partial(_process, config=config)
    pool = None
    if config.jobs > 1:
        pool = multiprocessing.get_context("fork").Pool(config.jobs)
        results = pool.imap(work, chunks)
    else:
        results = map(work, chunks)
    try:
        for part in results:
            report.records += part.records
            report.decode_errors.extend(part.decode_errors)
            for t, v in part.verdicts.items():
                _merge(report.verdicts[t], v)
            if emit is not None:
                for row in part.rows:
                    emit(row)
    finally:
        if pool is not None:
            pool.terminate()
    report.elapsed = time.perf_counter() - start
    for v in report.verdicts.values():
        v.elapsed = report.elapsed
    return report


def scan_graphs(graphs, config: ScanConfig, emit: Callable[[Row], None] | None = None) -> ScanReport:
    """Convenience wrapper: scan an iterable of :class:`Graph` objects."""
    import io

    data = "".join(graph6.encode(g) + "\n" for g in graphs).encode()
    return run_scan(io.BytesIO(data), config, emit)


def lemma_targets(stream: IO[bytes], chunk_bytes: int = CHUNK_BYTES) -> Iterator[tuple[int, str]]:
    """``(index, graph6)`` of every 2-connected claw-free non-Hamiltonian record.

    Records the kernels cannot decode go through the library, so malformed
    lines raise :class:`~domcrit.graph6.Graph6Error`.
    """
    from .hamilton import is_hamiltonian
    from .structure import connectivity, find_claw

    for chunk in iter_chunks(stream, chunk_bytes):
        buf = np.frombuffer(chunk.data, np.uint8)
        ns, adj, st = kernels.decode_lines(buf, chunk.starts, chunk.lens, kernels.FAST_MAX_N)
        hit = kernels.lemma_targets(ns, adj, st)
        for pos in range(len(ns)):
            s = chunk.starts[pos]
            text = chunk.data[s:s + chunk.lens[pos]].decode("ascii", "replace").strip()
            if st[pos] != kernels.OK:
                g = graph6.decode(text)
                if not (g.n >= 3 and connectivity(g) >= 2 and find_claw(g) is None and not is_hamiltonian(g)):
                    continue
            elif not hit[pos]:
                continue
            yield chunk.first_index + pos, text
