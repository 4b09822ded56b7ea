from itertools import combinations
from math import comb

import pytest

from lexdim import generators as gen
from lexdim.graph import GraphError, diameter
from lexdim.resolver import Mode, dimension
from lexdim.twins import twin_partition


def test_small_families():
    assert gen.path(2).same_edges(gen.complete(2))
    assert gen.cycle(3).same_edges(gen.complete(3))
    assert gen.empty(4).size == 0
    assert gen.cycle(5).has_edge(4, 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_edge_counts(n):
    assert gen.path(n).size == n - 1
    assert gen.complete(n).size == n * (n - 1) // 2
    if n >= 3:
        assert gen.cycle(n).size == n


def test_family_errors():
    for bad in (lambda: gen.cycle(2), lambda: gen.path(0), lambda: gen.complete_multipartite([]),
                lambda: gen.complete_multipartite([2, 0]), lambda: gen.kneser(4, 2), lambda: gen.kneser(3, 0)):
        with pytest.raises(GraphError):
            bad()


def test_multipartite_examples():
    assert gen.complete_multipartite([1, 1, 1]).same_edges(gen.complete(3))
    k22 = gen.complete_multipartite([2, 2])
    assert k22.edges() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert dimension(gen.complete_multipartite([2, 1]), Mode.ADJACENCY)[0] == 1


@pytest.mark.parametrize("parts", [[1], [3], [2, 1], [2, 2, 3], [1, 4, 1, 2]])
def test_multipartite_edge_count(parts):
    want = sum(p * q for p, q in combinations(parts, 2))
    assert gen.complete_multipartite(parts).size == want


def _disjoint_pairs(k, r):
    subsets = list(combinations(range(k), r))
    return sum(1 for a, b in combinations(subsets, 2) if not set(a) & set(b))


def test_kneser_examples():
    g = gen.kneser(5, 2)
    assert g.order == 10 and g.size == _disjoint_pairs(5, 2) == 15
    assert all(g.degree(v) == 3 for v in range(10))
    g = gen.kneser(7, 3)
    assert g.order == 35 and all(g.degree(v) == 4 for v in range(35))
    assert g.labels[0] == "{1,2,3}"


@pytest.mark.parametrize("k,r", [(5, 2), (7, 2), (7, 3), (9, 4)])
def test_kneser_regular(k, r):
    g = gen.kneser(k, r)
    assert g.order == comb(k, r)
    assert {g.degree(v) for v in range(g.order)} == {comb(k - r, r)}


def test_petersen():
    p = gen.petersen()
    assert p == gen.kneser(5, 2)
    assert (p.order, p.size) == (10, 15)
    assert diameter(p) == 2
    assert twin_partition(p).twin_free
