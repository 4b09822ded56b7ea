"""Small-graph corpora: every labeled graph, random samples, and the atlas."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph, from_edge_list, is_connected


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2**C(n,2)`` graphs on vertices ``0..n-1``."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield from_edge_list(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def random_graph(n: int, rng: np.random.Generator, p: float = 0.5) -> Graph:
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return from_edge_list(n, [pr for pr, k in zip(pairs, keep) if k])


def random_graphs(n: int, count: int, seed: int = 0, connected: bool = False) -> list[Graph]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        g = random_graph(n, rng, p=float(rng.uniform(0.2, 0.8)))
        if not connected or is_connected(g):
            out.append(g)
    return out


def atlas_graphs(order: int) -> list[Graph]:
    """One graph per isomorphism class on ``order`` vertices (orders up to 7)."""
    import networkx as nx

    if not 1 <= order <= 7:
        raise ValueError("the graph atlas covers orders 1..7")
    out = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() == order:
            out.append(from_edge_list(order, list(g.edges())))
    return out


def is_path_graph(g: Graph) -> bool:
    return is_connected(g) and g.size == g.order - 1 and all(g.degree(v) <= 2 for v in range(g.order))


def is_complete_graph(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2
