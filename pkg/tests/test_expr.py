import pytest
from hypothesis import given, strategies as st

from lexdim import generators as gen
from lexdim.expr import Expr, ExprSyntaxError, evaluate, family_of, parse_expr, to_graph
from lexdim.graph import GraphError, complement, line_graph, write_edge_list
from lexdim.lex import lex_product
from lexdim.tables import Family


@pytest.mark.parametrize("text,graph", [
    ("P5", gen.path(5)),
    ("C7", gen.cycle(7)),
    ("K4", gen.complete(4)),
    ("E3", gen.empty(3)),
    ("K(2,3)", gen.complete_multipartite([2, 3])),
    ("KG(7,2)", gen.kneser(7, 2)),
    ("petersen", gen.petersen()),
    ("comp(P4)", complement(gen.path(4))),
    ("line(K5)", line_graph(gen.complete(5))),
    ("lex(P3, C4)", lex_product(gen.path(3), gen.cycle(4))),
])
def test_parse_and_build(text, graph):
    assert to_graph(text).same_edges(graph)


def test_nested_expression():
    e = parse_expr("lex(comp(line(K4)), K(1,2))")
    assert e == Expr("lex", (Expr("comp", (Expr("line", (Expr("K", (4,)),)),)), Expr("parts", (1, 2))))
    assert evaluate(e).order == 18


_leaf = st.one_of(
    st.builds(lambda n: f"P{n}", st.integers(1, 9)),
    st.builds(lambda n: f"C{n}", st.integers(3, 9)),
    st.builds(lambda n: f"K{n}", st.integers(1, 9)),
    st.builds(lambda ps: "K(" + ",".join(map(str, ps)) + ")", st.lists(st.integers(1, 4), min_size=1, max_size=4)),
    st.just("petersen"),
    st.just("KG(7,3)"),
)
_exprs = st.recursive(
    _leaf,
    lambda inner: st.one_of(
        st.builds(lambda x: f"comp({x})", inner),
        st.builds(lambda x: f"line({x})", inner),
        st.builds(lambda x, y: f"lex({x}, {y})", inner, inner),
    ),
    max_leaves=4,
)


@given(_exprs)
def test_round_trip(text):
    e = parse_expr(text)
    assert parse_expr(str(e)) == e
    assert str(e) == text


def test_whitespace_is_ignored():
    assert parse_expr("  lex ( comp( P 4 ) ,K( 2 , 1 ) ) ") == parse_expr("lex(comp(P4),K(2,1))")


@pytest.mark.parametrize("text,pos", [
    ("", 0), ("Q4", 0), ("P", 1), ("lex(P3 C4)", 7), ("comp(P3", 7), ("P3)", 2), ("K(2,)", 4), ("file:", 5),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


@pytest.mark.parametrize("text", ["KG(4,2)", "KG(5,0)", "C2", "P0", "K0", "E0", "K(2,0)"])
def test_precondition_errors(text):
    with pytest.raises(GraphError):
        parse_expr(text)


def test_kneser_error_names_the_rule():
    with pytest.raises(GraphError, match=r"KG\(4,2\).*k >= 2r\+1"):
        parse_expr("comp(KG(4,2))")


def test_line_of_edgeless_graph_fails_on_evaluation():
    with pytest.raises(GraphError):
        to_graph("line(E3)")


def test_file_paths(tmp_path):
    f = tmp_path / "g.txt"
    write_edge_list(gen.cycle(5), f)
    assert to_graph(f"file:{f}").same_edges(gen.cycle(5))
    assert to_graph(f"lex(file:{f}, P2)").order == 10
    with pytest.raises(GraphError):
        to_graph(f"file:{tmp_path / 'missing.txt'}")


@pytest.mark.parametrize("text,family", [
    ("P4", Family("path", (4,))),
    ("comp(C5)", Family("cycle", (5,), True)),
    ("K(2,2)", Family("multipartite", (2, 2))),
    ("petersen", Family("petersen")),
    ("KG(5,2)", Family("petersen")),
    ("comp(comp(K3))", Family("complete", (3,))),
])
def test_family_of(text, family):
    assert family_of(parse_expr(text)).normalized() == family.normalized()


@pytest.mark.parametrize("text", ["line(K4)", "lex(P2,P2)", "KG(7,2)"])
def test_family_of_unnamed(text):
    assert family_of(parse_expr(text)) is None
