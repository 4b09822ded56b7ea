"""Resolving sets, metric and adjacency dimension, adjacency bases, gaps.

A set ``W`` resolves ``G`` iff for every pair ``u != v`` some landmark
``w in W`` sees them at different (truncated) distances.  Writing
``sep(u, v)`` for the set of such landmarks, resolving sets are exactly the
hitting sets of ``{sep(u, v)}``.  The exact search works on that family of
bit masks:

* :func:`dimension` first proves the optimum with a branch-and-bound over
  the smallest unhit mask, bounded below by a greedy packing of pairwise
  disjoint masks, and then walks k-subsets in lexicographic order to return
  the lexicographically first witness.
* :func:`dimension_by_enumeration` is the plain route: every k-subset for
  increasing k, representation vectors packed into integers and checked for
  collisions.  It shares nothing with the mask search and serves as its
  oracle in the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, GraphError, bfs_distances, bits, components, mask_of


class Mode(str, enum.Enum):
    METRIC = "metric"
    ADJACENCY = "adjacency"


class Case(str, enum.Enum):
    """Which hypothesis pattern the adjacency bases of ``H`` satisfy."""

    BOTH_AVOIDABLE = "BothAvoidable"
    ALL_BASES_BOTH = "AllBasesBoth"
    ALL_BASES_ONES = "AllBasesOnes"
    ALL_BASES_TWOS = "AllBasesTwos"

    def mirror(self) -> Case:
        """Case of the complement graph (ones and twos swap)."""
        return _MIRROR[self]


_MIRROR = {
    Case.BOTH_AVOIDABLE: Case.BOTH_AVOIDABLE,
    Case.ALL_BASES_BOTH: Case.ALL_BASES_BOTH,
    Case.ALL_BASES_ONES: Case.ALL_BASES_TWOS,
    Case.ALL_BASES_TWOS: Case.ALL_BASES_ONES,
}


def _mode(mode) -> Mode:
    return Mode(mode)


def profile_matrix(g: Graph, mode=Mode.METRIC) -> np.ndarray:
    """Matrix whose row ``v`` is the representation of ``v`` w.r.t. all of ``V``."""
    mode = _mode(mode)
    if mode is Mode.METRIC:
        dm = bfs_distances(g)
        if not dm.connected:
            raise GraphError("metric representations need a connected graph")
        return dm.array
    prof = np.full((g.order, g.order), 2, dtype=np.int64)
    for u, v in g.edges():
        prof[u, v] = prof[v, u] = 1
    np.fill_diagonal(prof, 0)
    return prof


def representation(g: Graph, v: int, landmarks: Sequence[int], mode=Mode.METRIC) -> tuple[int, ...]:
    mode = _mode(mode)
    if mode is Mode.ADJACENCY:
        return tuple(0 if v == w else 1 if g.has_edge(v, w) else 2 for w in landmarks)
    dm = bfs_distances(g)
    out = []
    for w in landmarks:
        d = dm[v, w]
        if not isinstance(d, int):
            raise GraphError(f"vertices {v} and {w} lie in different components")
        out.append(d)
    return tuple(out)


def _packed_keys(prof: np.ndarray, landmarks: Sequence[int]) -> np.ndarray:
    base = int(prof.max()) + 1
    keys = np.zeros(prof.shape[0], dtype=np.int64)
    for w in landmarks:
        keys = keys * base + prof[:, w]
    return keys


def is_resolving(g: Graph, landmarks: Sequence[int], mode=Mode.METRIC) -> bool:
    prof = profile_matrix(g, mode)
    keys = _packed_keys(prof, list(landmarks))
    return len(np.unique(keys)) == g.order


# -- hitting-set machinery -------------------------------------------------


def separator_masks(prof: np.ndarray) -> list[int]:
    """One mask per vertex pair: the landmarks telling the pair apart.

    Masks that contain another mask are dropped, since hitting the smaller
    one already hits them.
    """
    n = prof.shape[0]
    raw = set()
    for u in range(n - 1):
        diff = prof[u] != prof[u + 1:]
        packed = np.packbits(diff, axis=1, bitorder="little")
        for row in packed:
            raw.add(int.from_bytes(row.tobytes(), "little"))
    kept: list[int] = []
    for m in sorted(raw, key=lambda x: (x.bit_count(), x)):
        if all(k & ~m for k in kept):
            kept.append(m)
    return kept


def _packing_bound(masks: list[int]) -> int:
    used = count = 0
    for m in sorted(masks, key=int.bit_count):
        if not m & used:
            used |= m
            count += 1
    return count


def _greedy_hitting_set(masks: list[int], n: int) -> list[int]:
    pending = list(masks)
    chosen = []
    while pending:
        w = max(range(n), key=lambda v: sum(m >> v & 1 for m in pending))
        chosen.append(w)
        pending = [m for m in pending if not m >> w & 1]
    return chosen


def minimum_hitting_size(masks: list[int], n: int, lower: int = 0) -> int:
    """Size of a smallest vertex set meeting every mask."""
    best = len(_greedy_hitting_set(masks, n))
    if best <= lower:
        return best

    def rec(pending: list[int], chosen: int, banned: int) -> None:
        nonlocal best
        if not pending:
            best = chosen
            return
        if chosen + 1 >= best:
            return
        avail = [m & ~banned for m in pending]
        if not all(avail):
            return
        if chosen + _packing_bound(avail) >= best:
            return
        pick = min(avail, key=int.bit_count)
        for w in bits(pick):
            rec([m for m in pending if not m >> w & 1], chosen + 1, banned)
            if best <= lower:
                return
            banned |= 1 << w

    rec(masks, 0, 0)
    return best


def hitting_sets(masks: list[int], n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every k-subset of ``range(n)`` meeting all masks, in lex order."""

    def rec(pending: list[int], start: int, chosen: list[int]):
        remaining = k - len(chosen)
        if not pending:
            for rest in combinations(range(start, n), remaining):
                yield tuple(chosen) + rest
            return
        if remaining == 0:
            return
        limit = n - remaining
        avail = []
        for m in pending:
            a = m >> start << start
            if not a:
                return
            avail.append(a)
            limit = min(limit, a.bit_length() - 1)
        if _packing_bound(avail) > remaining:
            return
        for w in range(start, limit + 1):
            chosen.append(w)
            yield from rec([m for m in pending if not m >> w & 1], w + 1, chosen)
            chosen.pop()

    yield from rec(list(masks), 0, [])


def _information_bound(n: int, base: int) -> int:
    k = 0
    while base**k < n - k:
        k += 1
    return k


def dimension(g: Graph, mode=Mode.METRIC) -> tuple[int, tuple[int, ...]]:
    """Exact (adjacency) metric dimension and the lex-first minimum witness."""
    mode = _mode(mode)
    prof = profile_matrix(g, mode)
    masks = separator_masks(prof)
    if not masks:
        return 0, ()
    base = int(prof.max()) + 1
    k = minimum_hitting_size(masks, g.order, lower=_information_bound(g.order, base))
    return k, next(hitting_sets(masks, g.order, k))


def dimension_by_enumeration(g: Graph, mode=Mode.METRIC, chunk: int = 20000) -> tuple[int, tuple[int, ...]]:
    """Same contract as :func:`dimension`, by scanning every k-subset."""
    mode = _mode(mode)
    prof = profile_matrix(g, mode)
    n = g.order
    base = int(prof.max()) + 1
    for k in range(_information_bound(n, base), n + 1):
        if k == 0:
            if n == 1:
                return 0, ()
            continue
        combos = combinations(range(n), k)
        weights = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
        while True:
            block = np.array(list(_take(combos, chunk)), dtype=np.int64)
            if block.size == 0:
                break
            if base**k < 2**62:
                # keys[c, v]: packed representation of v w.r.t. subset c
                keys = np.einsum("vcj,j->cv", prof[:, block], weights)
                keys.sort(axis=1)
                ok = (np.diff(keys, axis=1) != 0).all(axis=1)
            else:
                ok = np.array([len(set(map(tuple, prof[:, c]))) == n for c in block])
            hit = np.flatnonzero(ok)
            if hit.size:
                return k, tuple(int(x) for x in block[hit[0]])
    raise AssertionError("the full vertex set always resolves")


def _take(it, count):
    for _ in range(count):
        try:
            yield next(it)
        except StopIteration:
            return


# -- adjacency bases and the theorem case ----------------------------------


@dataclass(frozen=True)
class BasisReport:
    order: int
    adim: int
    bases: tuple[tuple[int, ...], ...]
    has_all_ones: tuple[bool, ...]
    has_all_twos: tuple[bool, ...]
    case: Case

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "adim": self.adim,
            "case": self.case.value,
            "bases": [
                {"basis": list(b), "has_all_ones": o, "has_all_twos": t}
                for b, o, t in zip(self.bases, self.has_all_ones, self.has_all_twos)
            ],
        }


def classify_case(report: BasisReport) -> Case:
    some_without_ones = not all(report.has_all_ones)
    some_without_twos = not all(report.has_all_twos)
    if some_without_ones and some_without_twos:
        return Case.BOTH_AVOIDABLE
    if not some_without_ones and not some_without_twos:
        return Case.ALL_BASES_BOTH
    if some_without_twos:
        return Case.ALL_BASES_ONES
    return Case.ALL_BASES_TWOS


def all_adjacency_bases(g: Graph) -> BasisReport:
    prof = profile_matrix(g, Mode.ADJACENCY)
    masks = separator_masks(prof)
    adim = minimum_hitting_size(masks, g.order) if masks else 0
    bases = tuple(hitting_sets(masks, g.order, adim))
    ones, twos = [], []
    for b in bases:
        cols = prof[:, list(b)]
        ones.append(bool((cols == 1).all(axis=1).any()))
        twos.append(bool((cols == 2).all(axis=1).any()))
    partial = BasisReport(g.order, adim, bases, tuple(ones), tuple(twos), Case.BOTH_AVOIDABLE)
    return BasisReport(g.order, adim, bases, tuple(ones), tuple(twos), classify_case(partial))


# -- gaps --------------------------------------------------------------------


@dataclass(frozen=True)
class GapDecomposition:
    landmarks: frozenset[int]
    gaps: tuple[frozenset[int], ...]
    neighbors: frozenset[tuple[int, int]]

    def neighbors_of(self, i: int) -> list[int]:
        return sorted({b for a, b in self.neighbors if a == i} | {a for a, b in self.neighbors if b == i})


def gaps(g: Graph, landmarks) -> GapDecomposition:
    """Components of ``V - S`` and which of them can be joined through one landmark."""
    s = frozenset(landmarks)
    if len(s) < 2:
        raise GraphError("gaps are defined for landmark sets of size at least 2")
    if any(not 0 <= v < g.order for v in s):
        raise GraphError("landmark out of range")
    rest = ((1 << g.order) - 1) & ~mask_of(s)
    comps = sorted(components(g, rest) if rest else [], key=lambda m: (m & -m))
    pairs = set()
    for i, j in combinations(range(len(comps)), 2):
        union = comps[i] | comps[j]
        for x in s:
            within = union | 1 << x
            if len(components(g, within)) == 1:
                pairs.add((i, j))
                break
    return GapDecomposition(s, tuple(frozenset(bits(c)) for c in comps), frozenset(pairs))


def cycle_gap_violations(g: Graph, basis) -> list[str]:
    """Gap properties every adjacency basis of a cycle satisfies; returns failures."""
    d = gaps(g, basis)
    sizes = [len(q) for q in d.gaps]
    out = []
    if any(s > 3 for s in sizes):
        out.append("gap with more than three vertices")
    if sizes.count(3) > 1:
        out.append("more than one gap of three vertices")
    for i, s in enumerate(sizes):
        if s >= 2 and any(sizes[j] != 1 for j in d.neighbors_of(i)):
            out.append(f"gap {sorted(d.gaps[i])} has a neighbouring gap larger than one vertex")
    return out


def path_gap_violations(g: Graph, basis) -> list[str]:
    """As :func:`cycle_gap_violations` for the path ``0 - 1 - ... - (m-1)``."""
    d = gaps(g, basis)
    m = g.order
    sizes = [len(q) for q in d.gaps]
    ends = {i for i, q in enumerate(d.gaps) if 0 in q or m - 1 in q}
    out = []
    if any(s > 3 for s in sizes):
        out.append("gap with more than three vertices")
    if any(sizes[i] > 2 for i in ends):
        out.append("end gap with more than two vertices")
    if sizes.count(3) > 1:
        out.append("more than one gap of three vertices")
    if sum(sizes[i] == 2 for i in ends) > 1:
        out.append("both end gaps have two vertices")
    if any(sizes[i] == 2 for i in ends) and any(s > 2 for s in sizes):
        out.append("an end gap has two vertices while another gap has three")
    for i, s in enumerate(sizes):
        if s >= 2:
            for j in d.neighbors_of(i):
                if j in ends or sizes[j] != 1:
                    out.append(f"gap {sorted(d.gaps[i])} has an end gap or large gap as neighbour")
    return out
