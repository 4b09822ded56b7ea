"""Twin classes and the counts ``a, b, iota, iota_K, iota_N`` of a graph."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graph import Graph, GraphError


class ClassType(str, enum.Enum):
    ONE = "1"
    CLIQUE = "K"
    INDEPENDENT = "N"


@dataclass(frozen=True)
class TwinSummary:
    n: int
    classes: tuple[tuple[int, ...], ...]
    types: tuple[ClassType, ...]
    a: int
    b: int
    iota: int
    iota_K: int
    iota_N: int

    @property
    def twin_free(self) -> bool:
        return self.iota == self.n

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "iota": self.iota,
            "iota_K": self.iota_K,
            "iota_N": self.iota_N,
            "classes": [{"vertices": list(c), "type": t.value} for c, t in zip(self.classes, self.types)],
        }


def are_twins(g: Graph, u: int, v: int) -> bool:
    """``N(u) - {v} == N(v) - {u}``."""
    if u == v:
        raise GraphError("twins are distinct vertices")
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


def twin_partition(g: Graph) -> TwinSummary:
    n = g.order
    owner = [-1] * n
    classes: list[list[int]] = []
    for v in range(n):
        if owner[v] >= 0:
            continue
        owner[v] = len(classes)
        cls = [v]
        for u in range(v + 1, n):
            if owner[u] < 0 and are_twins(g, v, u):
                owner[u] = owner[v]
                cls.append(u)
        classes.append(cls)

    types = []
    for cls in classes:
        if len(cls) == 1:
            types.append(ClassType.ONE)
            continue
        adjacent = g.has_edge(cls[0], cls[1])
        for i, x in enumerate(cls):
            for y in cls[i + 1:]:
                # a class mixing adjacent and non-adjacent pairs would mean the
                # grouping above is not an equivalence relation
                assert g.has_edge(x, y) == adjacent, f"twin class {cls} is not homogeneous"
                assert are_twins(g, x, y), f"twin class {cls} is not transitive"
        types.append(ClassType.CLIQUE if adjacent else ClassType.INDEPENDENT)

    a = sum(len(c) for c, t in zip(classes, types) if t is ClassType.CLIQUE)
    b = sum(len(c) for c, t in zip(classes, types) if t is ClassType.INDEPENDENT)
    iota_k = types.count(ClassType.CLIQUE)
    iota_n = types.count(ClassType.INDEPENDENT)
    iota = len(classes)
    assert iota == n - a - b + iota_n + iota_k
    return TwinSummary(n, tuple(map(tuple, classes)), tuple(types), a, b, iota, iota_k, iota_n)
