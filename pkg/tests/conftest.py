from itertools import combinations

import hypothesis.strategies as st

from lexdim.graph import from_edge_list


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, k in zip(pairs, keep) if k])
