"""Interval 6-colorings of (3,4)-biregular bigraphs via proper path-factors.

Graphs, factors and colorings are plain JSON-compatible values in the same
layout the `ivc` command-line tool uses:

* graph: {"x_count": n, "y_count": m, "edges": [[x, y], ...]}
* factor: [["x0", 0, "y1", 3, "x2"], ...]
* coloring: [c0, c1, ...] indexed by edge id
"""

import json

from . import _ivc
from ._ivc import Error

__all__ = [
    "Error",
    "generate",
    "bundled_factor",
    "find_factor",
    "color",
    "explain_factor",
    "is_interval",
    "full_3regular",
    "interval_coloring",
    "hunt",
    "to_dot",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def _load(text):
    return None if text is None else json.loads(text)


def generate(family, k=1, seed=0, simple=False):
    """Graph for subset6, eight-triples, claw-triple, k34 or random."""
    return _load(_ivc.generate(family, k, seed, simple))


def bundled_factor(family):
    """The known P7-factor of subset6 or eight-triples."""
    return _load(_ivc.bundled_factor(family))


def find_factor(graph, method="search", max_nodes=10_000_000, lengths=(2, 4, 6, 8)):
    """Report dict with "status" and "factor" (None unless found)."""
    return _load(_ivc.find_factor(_dump(graph), method, max_nodes, list(lengths)))


def color(graph, factor):
    """Interval 6-coloring built from a proper path-factor."""
    return _load(_ivc.color(_dump(graph), _dump(factor)))


def explain_factor(graph, factor):
    """None for a proper path-factor, otherwise the reason it is not."""
    return _ivc.explain_factor(_dump(graph), _dump(factor))


def is_interval(graph, coloring):
    return _ivc.is_interval(_dump(graph), _dump(coloring))


def full_3regular(graph):
    """Edge ids of a full 3-regular subgraph, or None."""
    cert = _load(_ivc.full_3regular(_dump(graph)))
    return None if cert is None else cert["edges"]


def interval_coloring(graph, k):
    """Exhaustive interval k-coloring, or None."""
    return _load(_ivc.interval_coloring(_dump(graph), k))


def hunt(k, trials, seed=1, jobs=1, max_nodes=10_000_000):
    return _load(_ivc.hunt(k, trials, seed, jobs, max_nodes))


def to_dot(graph, coloring=None):
    return _ivc.to_dot(_dump(graph), None if coloring is None else _dump(coloring))
