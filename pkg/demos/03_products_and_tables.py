"""Metric dimension of lexicographic products.

Three independent answers for dim(G[H]): the case-based formula, the
closed-form family tables, and exhaustive search on the product itself.
"""

from lexdim import closed_form_dim_lex, predict_dim_lex, verify
from lexdim.expr import family_of, parse_expr, to_graph

pairs = [("K2", "P2"), ("K3", "C3"), ("P3", "C3"), ("C3", "K2"), ("P3", "E3"), ("K2", "P6"),
         ("P4", "P5"), ("K(2,1)", "P6"), ("C3", "comp(P4)"), ("K3", "petersen")]

print(f"{'G[H]':<18} {'case':<14} {'formula':>7} {'table':>6} {'search':>7}")
for gs, hs in pairs:
    g, h = to_graph(gs), to_graph(hs)
    p = predict_dim_lex(g, h)
    table = closed_form_dim_lex(family_of(parse_expr(gs)), family_of(parse_expr(hs))).value
    rep = verify(g, h, budget=30)
    searched = rep.brute_force if rep.brute_force is not None else "-"
    flag = "" if table == p.value else "  <- table row disagrees"
    print(f"{gs + '[' + hs + ']':<18} {p.case.value:<14} {p.value:7d} {table:6d} {searched!s:>7}{flag}")

p = predict_dim_lex(to_graph("K(2,2,1)"), to_graph("C3"))
print("\ntrace for K(2,2,1)[C3]:", p.trace)
