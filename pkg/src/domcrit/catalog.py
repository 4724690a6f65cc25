"""Locate nauty's geng and stream its graph6 output."""
from __future__ import annotations

import os
import shutil
import subprocess
from pathlib import Path
from typing import IO, Iterator

ENV_VAR = "DOMCRIT_GENG"
_TOOLS_BIN = Path(__file__).resolve().parents[2] / "tools" / "bin"


class CatalogUnavailable(RuntimeError):
    pass


def find_geng(claw_free: bool = False) -> str:
    """Path of geng (or the claw-free pruning build) from $DOMCRIT_GENG, tools/bin, or PATH."""
    name = "geng-clawfree" if claw_free else "geng"
    override = os.environ.get(ENV_VAR)
    candidates = []
    if override:
        base = Path(override)
        candidates.append(base.parent / name if claw_free else base)
    candidates.append(_TOOLS_BIN / name)
    for c in candidates:
        if c.is_file() and os.access(c, os.X_OK):
            return str(c)
    found = shutil.which(name)
    if found:
        return found
    raise CatalogUnavailable(f"{name} not found; run tools/build_geng.sh or set {ENV_VAR}")


def geng_args(n: int, claw_free: bool = False, biconnected: bool = False) -> list[str]:
    if not 1 <= n <= 32:
        raise ValueError("geng handles 1 <= n <= 32")
    flag = "-Cq" if biconnected else "-cq"
    return [find_geng(claw_free), flag, str(n)]


def open_catalog(n: int, claw_free: bool = False, biconnected: bool = False) -> subprocess.Popen:
    """Start geng for all connected (or 2-connected) graphs on ``n`` vertices; read ``.stdout``."""
    return subprocess.Popen(geng_args(n, claw_free, biconnected), stdout=subprocess.PIPE)


def catalog_lines(n: int, claw_free: bool = False, biconnected: bool = False) -> Iterator[str]:
    proc = open_catalog(n, claw_free, biconnected)
    assert proc.stdout is not None
    try:
        for raw in proc.stdout:
            yield raw.decode("ascii").strip()
    finally:
        proc.stdout.close()
        if proc.wait() != 0:
            raise CatalogUnavailable(f"geng exited with status {proc.returncode}")


def write_catalog(fh: IO[bytes], orders, claw_free: bool = False, biconnected: bool = False) -> int:
    """Copy the catalogs for every order in ``orders`` to ``fh``; returns the record count."""
    count = 0
    for n in orders:
        proc = open_catalog(n, claw_free, biconnected)
        assert proc.stdout is not None
        while True:
            block = proc.stdout.read(1 << 20)
            if not block:
                break
            count += block.count(b"\n")
            fh.write(block)
        if proc.wait() != 0:
            raise CatalogUnavailable(f"geng exited with status {proc.returncode}")
    return count
