"""Immutable simple graphs stored as per-vertex neighbour bit rows.

Vertices are the integers ``0..order-1``.  Row ``i`` is a Python int whose
bit ``j`` is set iff ``i`` and ``j`` are adjacent.  Everything derived from a
graph (distances, twin classes, bases) is computed by free functions and
never cached on the graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or violated preconditions."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    order: int
    adj: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.order < 1:
            raise GraphError("a graph needs at least one vertex")
        if len(self.adj) != self.order:
            raise GraphError("one adjacency row per vertex is required")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {i} references a vertex out of range")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric edge ({i}, {j})")
        if self.labels is not None and len(self.labels) != self.order:
            raise GraphError("one label per vertex is required")

    def __len__(self) -> int:
        return self.order

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in bits(self.adj[u]) if v > u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def same_edges(self, other: Graph) -> bool:
        """Row equality under the fixed numbering (labels ignored)."""
        return self.order == other.order and self.adj == other.adj


def from_edge_list(
    order: int, edges: Iterable[Sequence[int]], labels: Optional[Sequence[str]] = None
) -> Graph:
    """Build a graph from vertex pairs; duplicate pairs collapse to one edge."""
    if order < 1:
        raise GraphError("a graph needs at least one vertex")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows), tuple(labels) if labels is not None else None)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj))
    return Graph(g.order, rows, g.labels)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``k`` is the ``k``-th edge of ``g.edges()``."""
    edges = g.edges()
    if not edges:
        raise GraphError("the line graph of an edgeless graph has no vertices")
    pairs = [
        (a, b)
        for a, b in combinations(range(len(edges)), 2)
        if set(edges[a]) & set(edges[b])
    ]
    labels = ["{" + f"{g.label(u)},{g.label(v)}" + "}" for u, v in edges]
    return from_edge_list(len(edges), pairs, labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, renumbered in increasing order."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    pairs = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    labels = [g.label(v) for v in keep]
    return from_edge_list(len(keep), pairs, labels)


class _Unreachable:
    """Distance between vertices in different components.

    Deliberately supports comparison but no arithmetic, so code that adds
    to an unreachable distance fails loudly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("INF")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self


INF = _Unreachable()


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts.

    ``array`` holds the raw matrix with ``-1`` marking unreachable pairs;
    indexing the object itself returns ``INF`` for those.
    """

    order: int
    array: np.ndarray

    def __getitem__(self, ij):
        d = int(self.array[ij])
        return INF if d < 0 else d

    @property
    def connected(self) -> bool:
        return bool((self.array >= 0).all())

    def diameter(self) -> int:
        if not self.connected:
            raise GraphError("diameter is undefined for a disconnected graph")
        return int(self.array.max())


def bfs_distances(g: Graph) -> DistanceMatrix:
    n = g.order
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            for v in bits(frontier):
                dist[s, v] = d
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
    dist.flags.writeable = False
    return DistanceMatrix(n, dist)


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def diameter(g: Graph) -> int:
    return bfs_distances(g).diameter()


def components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Connected components (as bit masks) of the subgraph induced on ``within``."""
    remaining = (1 << g.order) - 1 if within is None else within
    out = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~seen
            seen |= frontier
        out.append(seen)
        remaining &= ~seen
    return out


# Edge-list text format: header "n m", then m lines "u v"; '#' starts a comment.


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges but {len(edges)} were given")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))
