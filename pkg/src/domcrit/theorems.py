"""Library evaluators for the theorem scans.

Each evaluator takes a graph and returns ``(status, reason)`` with status one
of ``"unmet"`` (hypothesis fails), ``"holds"`` or ``"fails"``.  Hypotheses are
tested cheapest first: connectivity, claw-freeness, then criticality.
"""
from __future__ import annotations

from typing import Callable

from .closure import check_theorem_pumm
from .criticality import check_vertex_critical
from .graph import Graph
from .hamilton import is_hamiltonian
from .structure import HypothesisUnmet, connectivity, find_claw, find_violating_cutset

UNMET, HOLDS, FAILS = "unmet", "holds", "fails"
THEOREMS = ("A", "M", "W", "mike", "pumm", "Ch-soundness")
W_ORDERS = (4, 5)
DEFAULT_MAX_CUT = 4
MAX_CUT_CAP = 6


def _ham_conclusion(g: Graph, hyp: str) -> tuple[str, str]:
    if is_hamiltonian(g):
        return HOLDS, f"{hyp}; Hamiltonian"
    return FAILS, f"{hyp} but non-Hamiltonian"


def eval_A(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    if connectivity(g) < 2:
        return UNMET, "not 2-connected"
    if find_claw(g) is not None:
        return UNMET, "contains a claw"
    if not check_vertex_critical(g, "gamma", 3).critical:
        return UNMET, "not 3-gamma-vertex-critical"
    return _ham_conclusion(g, "2-connected claw-free 3-gamma-vertex-critical")


def eval_M(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    if connectivity(g) < 2:
        return UNMET, "not 2-connected"
    if find_claw(g) is not None:
        return UNMET, "contains a claw"
    if not check_vertex_critical(g, "gamma_c", 3).critical:
        return UNMET, "not 3-gamma_c-vertex-critical"
    return _ham_conclusion(g, "2-connected claw-free 3-gamma_c-vertex-critical")


def eval_W(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    if connectivity(g) < 3:
        return UNMET, "not 3-connected"
    if find_claw(g) is not None:
        return UNMET, "contains a claw"
    for k in W_ORDERS:
        if check_vertex_critical(g, "gamma_c", k).critical:
            return _ham_conclusion(g, f"3-connected claw-free {k}-gamma_c-vertex-critical")
    return UNMET, "not 4- or 5-gamma_c-vertex-critical"


def eval_mike(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    if connectivity(g) < 2:
        return UNMET, "not 2-connected"
    c = check_vertex_critical(g, "gamma_c", 4).critical
    t = check_vertex_critical(g, "gamma_t", 4).critical
    if c == t:
        return HOLDS, "both 4-critical" if c else "neither 4-critical"
    if c:
        return FAILS, "4-gamma_c-vertex-critical but not 4-gamma_t-vertex-critical"
    return FAILS, "4-gamma_t-vertex-critical but not 4-gamma_c-vertex-critical"


def eval_pumm(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    try:
        v = check_theorem_pumm(g)
    except HypothesisUnmet as exc:
        return UNMET, str(exc)
    return (HOLDS if v.holds else FAILS), (f"branch {v.branch}: {v.detail}" if v.holds else v.detail)


def eval_ch(g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    if not is_hamiltonian(g):
        return UNMET, "non-Hamiltonian"
    w = find_violating_cutset(g, max_cut)
    if w is None:
        return HOLDS, f"Hamiltonian; no violating cut set of size <= {max_cut}"
    return FAILS, (f"Hamiltonian but removing {sorted(w.cut)} leaves "
                   f"{w.components_after} components")


EVALUATORS: dict[str, Callable[..., tuple[str, str]]] = {
    "A": eval_A,
    "M": eval_M,
    "W": eval_W,
    "mike": eval_mike,
    "pumm": eval_pumm,
    "Ch-soundness": eval_ch,
}


def evaluate(theorem: str, g: Graph, max_cut: int = DEFAULT_MAX_CUT) -> tuple[str, str]:
    try:
        fn = EVALUATORS[theorem]
    except KeyError:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}") from None
    return fn(g, max_cut)
