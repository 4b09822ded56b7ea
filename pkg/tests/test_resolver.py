from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import graphs
from lexdim import generators as gen
from lexdim.corpus import all_labeled_graphs
from lexdim.graph import GraphError, complement, is_connected
from lexdim.resolver import (
    Case,
    Mode,
    all_adjacency_bases,
    classify_case,
    cycle_gap_violations,
    dimension,
    dimension_by_enumeration,
    gaps,
    hitting_sets,
    is_resolving,
    minimum_hitting_size,
    path_gap_violations,
    representation,
)
from lexdim.twins import are_twins


def test_representation_examples():
    p5 = gen.path(5)
    assert representation(p5, 2, [1, 3], Mode.ADJACENCY) == (1, 1)
    assert representation(p5, 2, [0, 4], Mode.ADJACENCY) == (2, 2)
    assert representation(p5, 2, [0, 4], Mode.METRIC) == (2, 2)
    assert representation(p5, 0, [0]) == (0,)
    assert representation(gen.cycle(6), 0, [3, 1]) == (3, 1)


def test_metric_representation_needs_connectivity():
    with pytest.raises(GraphError):
        representation(gen.empty(2), 0, [1], Mode.METRIC)
    assert representation(gen.empty(2), 0, [1], Mode.ADJACENCY) == (2,)


def test_is_resolving_examples():
    assert is_resolving(gen.path(5), [0], Mode.METRIC)
    assert not is_resolving(gen.complete(4), [0, 1], Mode.METRIC)
    assert is_resolving(gen.cycle(7), [0, 1, 3], Mode.ADJACENCY)


def test_c7_adjacency_vectors_distinct_by_hand():
    # cyclic distance truncated at 2, computed without any graph machinery
    def a(i, j):
        d = min(abs(i - j), 7 - abs(i - j))
        return min(d, 2)

    vectors = {tuple(a(v, w) for w in (0, 1, 3)) for v in range(7)}
    assert len(vectors) == 7


def test_dimension_examples():
    assert dimension(gen.complete(4), Mode.METRIC)[0] == 3
    assert dimension(gen.path(9), Mode.ADJACENCY)[0] == 4
    assert dimension(gen.complete_multipartite([2, 2, 1]), Mode.ADJACENCY)[0] == 2
    assert dimension(gen.path(7), Mode.METRIC) == (1, (0,))


def test_dimension_of_single_vertex_is_zero():
    one = gen.path(1)
    assert dimension(one, Mode.ADJACENCY) == (0, ())
    assert dimension(one, Mode.METRIC) == (0, ())


def test_metric_dimension_of_disconnected_graph_is_an_error():
    with pytest.raises(GraphError):
        dimension(gen.empty(3), Mode.METRIC)


@settings(max_examples=120, deadline=None)
@given(graphs(min_order=1, max_order=8), st.sampled_from(list(Mode)))
def test_search_matches_plain_enumeration(g, mode):
    assume(mode is Mode.ADJACENCY or is_connected(g))
    k, w = dimension(g, mode)
    k2, w2 = dimension_by_enumeration(g, mode)
    assert (k, w) == (k2, w2)
    assert is_resolving(g, w, mode)


@settings(max_examples=60, deadline=None)
@given(graphs(min_order=2, max_order=7), st.data())
def test_superset_closure(g, data):
    mode = Mode.ADJACENCY if not is_connected(g) else data.draw(st.sampled_from(list(Mode)))
    w = list(dimension(g, mode)[1])
    extra = data.draw(st.sets(st.integers(0, g.order - 1)))
    assert is_resolving(g, sorted(set(w) | extra), mode)


@settings(max_examples=80, deadline=None)
@given(graphs(min_order=1, max_order=8))
def test_adjacency_dimension_is_complement_invariant(g):
    assert dimension(g, Mode.ADJACENCY)[0] == dimension(complement(g), Mode.ADJACENCY)[0]


@settings(max_examples=80, deadline=None)
@given(graphs(min_order=1, max_order=8))
def test_metric_bounded_by_adjacency(g):
    assume(is_connected(g))
    assert dimension(g, Mode.METRIC)[0] <= dimension(g, Mode.ADJACENCY)[0]


@pytest.mark.parametrize("n", [2, 3])
def test_adjacency_dimension_one_characterization(n):
    # order 2: K2 and its complement; order 3: P3 and its complement (all labelings)
    for g in all_labeled_graphs(n):
        extreme = g.size in (0, n * (n - 1) // 2)
        assert (dimension(g, Mode.ADJACENCY)[0] == 1) == (n == 2 or not extreme)


@pytest.mark.parametrize("n", range(2, 6))
def test_adjacency_dimension_full_characterization(n):
    for g in all_labeled_graphs(n):
        extreme = g.size in (0, n * (n - 1) // 2)
        assert (dimension(g, Mode.ADJACENCY)[0] == n - 1) == extreme


def _twin_pairs(g):
    return [(u, v) for u, v in combinations(range(g.order), 2) if are_twins(g, u, v)]


@pytest.mark.parametrize("mode", list(Mode))
def test_twins_and_resolving_sets(mode):
    corpus = [gen.path(3), gen.complete(4), gen.complete_multipartite([2, 2, 1]), gen.cycle(4),
              gen.complete_multipartite([3, 1]), gen.empty(3)]
    for g in corpus:
        if mode is Mode.METRIC and not is_connected(g):
            continue
        pairs = _twin_pairs(g)
        assert pairs
        for k in range(g.order + 1):
            for w in combinations(range(g.order), k):
                if not is_resolving(g, w, mode):
                    continue
                for u, v in pairs:
                    assert u in w or v in w
                    if u in w and v not in w:
                        swapped = sorted((set(w) - {u}) | {v})
                        assert is_resolving(g, swapped, mode)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=8),
    st.integers(0, n),
)))
def test_hitting_set_enumeration_matches_itertools(case):
    n, masks, k = case
    want = [c for c in combinations(range(n), k) if all(any(m >> x & 1 for x in c) for m in masks)]
    assert list(hitting_sets(masks, n, k)) == want
    smallest = min(len(c) for r in range(n + 1) for c in combinations(range(n), r)
                   if all(any(m >> x & 1 for x in c) for m in masks))
    assert minimum_hitting_size(masks, n) == smallest


def test_bases_of_p5():
    rep = all_adjacency_bases(gen.path(5))
    assert rep.adim == 2
    by_basis = {b: (o, t) for b, o, t in zip(rep.bases, rep.has_all_ones, rep.has_all_twos)}
    assert by_basis[(0, 4)][0] is False   # {w_1, w_5}: nobody sees (1, 1)
    assert by_basis[(1, 3)][1] is False   # {w_2, w_4}: nobody sees (2, 2)
    assert rep.case is Case.BOTH_AVOIDABLE
    assert classify_case(rep) is Case.BOTH_AVOIDABLE


def test_bases_of_small_complete_and_empty():
    k3 = all_adjacency_bases(gen.complete(3))
    assert k3.adim == 2 and len(k3.bases) == 3
    assert all(k3.has_all_ones) and not any(k3.has_all_twos)
    assert k3.case is Case.ALL_BASES_ONES
    assert all_adjacency_bases(gen.empty(3)).case is Case.ALL_BASES_TWOS


@pytest.mark.parametrize("h", [gen.path(6), gen.cycle(6)])
def test_bases_of_six_vertex_path_and_cycle(h):
    rep = all_adjacency_bases(h)
    assert all(rep.has_all_ones) and all(rep.has_all_twos)
    assert rep.case is Case.ALL_BASES_BOTH


@settings(max_examples=60, deadline=None)
@given(graphs(min_order=2, max_order=7))
def test_basis_report_invariants(g):
    rep = all_adjacency_bases(g)
    assert rep.bases
    for b in rep.bases:
        assert len(b) == rep.adim and is_resolving(g, b, Mode.ADJACENCY)
    for w in combinations(range(g.order), rep.adim - 1):
        assert not is_resolving(g, w, Mode.ADJACENCY)
    assert all_adjacency_bases(complement(g)).case is rep.case.mirror()


def test_gap_examples():
    d = gaps(gen.cycle(8), [0, 3])
    assert d.gaps == (frozenset({1, 2}), frozenset({4, 5, 6, 7}))
    assert d.neighbors == {(0, 1)}
    d = gaps(gen.path(5), [1, 3])
    assert d.gaps == (frozenset({0}), frozenset({2}), frozenset({4}))
    assert d.neighbors == {(0, 1), (1, 2)}


def test_gap_needs_two_landmarks():
    with pytest.raises(GraphError):
        gaps(gen.cycle(5), [0])


@settings(max_examples=50, deadline=None)
@given(graphs(min_order=3, max_order=8), st.data())
def test_gaps_partition_the_complement(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1), min_size=2))
    d = gaps(g, s)
    covered = [v for q in d.gaps for v in q]
    assert sorted(covered) == sorted(set(range(g.order)) - s)


def test_c10_bases_have_small_gaps():
    c10 = gen.cycle(10)
    for b in all_adjacency_bases(c10).bases:
        assert all(len(q) <= 3 for q in gaps(c10, b).gaps)
        assert cycle_gap_violations(c10, b) == []


@pytest.mark.parametrize("m", range(4, 13))
def test_gap_properties(m):
    for b in all_adjacency_bases(gen.cycle(m)).bases:
        assert cycle_gap_violations(gen.cycle(m), b) == []
    for b in all_adjacency_bases(gen.path(m)).bases:
        assert path_gap_violations(gen.path(m), b) == []


def test_gap_checks_flag_non_bases():
    # a resolving-but-too-sparse landmark set on C_12 leaves a gap of four
    assert "gap with more than three vertices" in cycle_gap_violations(gen.cycle(12), [0, 5])
