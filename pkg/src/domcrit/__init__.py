"""Domination-critical graph toolkit: families, exact invariants, criticality and Hamiltonicity checks."""
from .graph import Graph, GraphError
from .graph6 import decode as graph6_decode, encode as graph6_encode

__version__ = "0.1.0"

__all__ = ["Graph", "GraphError", "graph6_decode", "graph6_encode", "__version__"]
