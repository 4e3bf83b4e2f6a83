"""Directed co-graphs and their subclasses: constructions, decompositions, recognizers."""
from __future__ import annotations

from dcograph.core import (
    Digraph,
    EdgeListError,
    UndirectedGraph,
    format_edge_list,
    parse_edge_list,
    to_dot,
)

__all__ = [
    "Digraph",
    "UndirectedGraph",
    "EdgeListError",
    "parse_edge_list",
    "format_edge_list",
    "to_dot",
]
