"""graph6 codec, bit-exact with the format used by nauty's ``geng``.

Layout: a size prefix N(n), then the upper triangle of the adjacency matrix
read column by column (x01, x02, x12, x03, ...), packed big-endian into
6-bit groups, each group offset by 63, padding bits zero.
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Graph6Error("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} too large for graph6")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``."""
    if not data:
        raise Graph6Error("empty graph6 line")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 36-bit size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 18-bit size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode_bytes(g: Graph) -> bytes:
    n = g.n
    out = bytearray(_encode_size(n))
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def encode(g: Graph) -> str:
    """graph6 text for ``g`` without header or newline."""
    return encode_bytes(g).decode("ascii")


def decode(line: str | bytes) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"bad character {chr(b)!r} at offset {pos}")
    n, start = _decode_size(data)
    if n > 512:
        raise Graph6Error(f"vertex count {n} exceeds the supported maximum of 512")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit stream: {len(body)} of {need} data bytes for n={n}")
    if len(body) > need:
        raise Graph6Error(f"n mismatch: {len(body)} data bytes but n={n} needs {need}")
    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error("non-zero padding bits")
                continue
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph._trusted(n, rows)


def iter_lines(stream: Iterable[str | bytes]) -> Iterator[tuple[int, str]]:
    """Yield ``(record index, stripped line)`` skipping the header and blank lines."""
    idx = 0
    for raw in stream:
        line = raw.decode("ascii", "replace") if isinstance(raw, bytes) else raw
        line = line.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line:
            continue
        yield idx, line
        idx += 1


def read(stream: Iterable[str | bytes]) -> Iterator[tuple[int, Graph | Graph6Error, str]]:
    """Decode a stream, yielding ``(index, graph or error, line)``; errors do not stop the stream."""
    for idx, line in iter_lines(stream):
        try:
            yield idx, decode(line), line
        except Graph6Error as exc:
            yield idx, exc, line


def write(graphs: Iterable[Graph], fh: IO[str], header: bool = False) -> None:
    if header:
        fh.write(HEADER)
    for g in graphs:
        fh.write(encode(g) + "\n")
