import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from domcrit import catalog  # noqa: E402
from domcrit.graph import Graph  # noqa: E402

DATA = Path(__file__).parent / "data"


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_connected(rng: random.Random, n: int, p_max: float = 1.0) -> Graph:
    """Random spanning tree plus random extra edges, so every draw is connected."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    p = rng.random() * p_max
    edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    return Graph.from_edges(n, sorted(edges))


def data_lines(name: str) -> list[str]:
    return [ln.strip() for ln in (DATA / name).read_text().splitlines() if ln.strip()]


def have_geng(claw_free: bool = False) -> bool:
    try:
        catalog.find_geng(claw_free)
        return True
    except catalog.CatalogUnavailable:
        return False


needs_geng = pytest.mark.skipif(not have_geng(), reason="geng not built (tools/build_geng.sh)")


def random_claw_free(rng: random.Random, n: int) -> Graph:
    """Random connected graph, then join two leaves of each remaining claw until none is left."""
    from domcrit.graph import add_edge
    from domcrit.structure import find_claw

    g = random_connected(rng, n, 0.3)
    while (hit := find_claw(g)) is not None:
        a, b = rng.sample([hit.mapping[i] for i in (1, 2, 3)], 2)
        g = add_edge(g, a, b)
    return g


# acceptance verdict lines, repeated in the terminal summary
ACCEPTANCE: list[str] = []


def report_criterion(label: str, ok: bool, detail: str) -> str:
    line = f"{'PASS' if ok else 'FAIL'} criterion {label}: {detail}"
    ACCEPTANCE.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
