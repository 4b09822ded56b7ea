"""Named graph families with fixed vertex numberings.

Paths and cycles follow ``(w_1, ..., w_m)`` with ``w_k`` stored at index
``k - 1``.  Complete multipartite graphs number their parts consecutively.
Kneser vertices are the ``r``-subsets of ``{1..k}`` in lexicographic order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, from_edge_list


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edge_list(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return from_edge_list(n, [])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise GraphError("at least one part is required")
    if any(p < 1 for p in parts):
        raise GraphError("every part must have at least one vertex")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    edges = [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]]
    return from_edge_list(n, edges)


def kneser(k: int, r: int, *, allow_small: bool = False) -> Graph:
    """Kneser graph ``KG(k, r)``: r-subsets of {1..k}, adjacent when disjoint.

    ``k < 2r + 1`` is rejected unless ``allow_small`` is set; the small
    cases are only wanted as complements of line graphs, e.g. ``KG(4, 2)``.
    """
    if r < 1 or k < r or (k < 2 * r + 1 and not allow_small):
        raise GraphError(f"KG({k},{r}) requires r >= 1 and k >= 2r+1")
    subsets = list(combinations(range(1, k + 1), r))
    edges = [
        (a, b)
        for a, b in combinations(range(len(subsets)), 2)
        if not set(subsets[a]) & set(subsets[b])
    ]
    labels = ["{" + ",".join(map(str, s)) + "}" for s in subsets]
    return from_edge_list(len(subsets), edges, labels)


def petersen() -> Graph:
    return kneser(5, 2)
