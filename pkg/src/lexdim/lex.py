"""Lexicographic products and the theorem-driven prediction of dim(G[H]).

The prediction only needs two ingredients: the twin counts of ``G`` and the
pattern of all-ones / all-twos vertices over the adjacency bases of ``H``.

    BothAvoidable  n * adim(H)
    AllBasesBoth   n * (adim(H) + 1) - iota(G)
    AllBasesOnes   n * adim(H) + a(G) - iota_K(G)
    AllBasesTwos   n * adim(H) + b(G) - iota_N(G)
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, from_edge_list, is_connected
from .resolver import BasisReport, Case, Mode, all_adjacency_bases, dimension
from .twins import TwinSummary, twin_partition

DEFAULT_BUDGET = 24

FORMULAS = {
    Case.BOTH_AVOIDABLE: "n*adim",
    Case.ALL_BASES_BOTH: "n*(adim+1)-iota",
    Case.ALL_BASES_ONES: "n*adim+a-iota_K",
    Case.ALL_BASES_TWOS: "n*adim+b-iota_N",
}


class VerificationError(AssertionError):
    """The theorem engine disagreed with the exhaustive search."""


def lex_product(g: Graph, h: Graph) -> Graph:
    """``G[H]``; vertex ``(v, u)`` gets index ``v * |H| + u``."""
    m = h.order
    edges = []
    for v in range(g.order):
        for u in range(m):
            x = v * m + u
            for u2 in h.neighbors(u):
                if u2 > u:
                    edges.append((x, v * m + u2))
            for v2 in g.neighbors(v):
                if v2 > v:
                    edges.extend((x, v2 * m + u2) for u2 in range(m))
    labels = [f"({g.label(v)},{h.label(u)})" for v in range(g.order) for u in range(m)]
    return from_edge_list(g.order * m, edges, labels)


def formula_value(case: Case, n: int, adim: int, tw: TwinSummary) -> int:
    if case is Case.BOTH_AVOIDABLE:
        return n * adim
    if case is Case.ALL_BASES_BOTH:
        return n * (adim + 1) - tw.iota
    if case is Case.ALL_BASES_ONES:
        return n * adim + tw.a - tw.iota_K
    return n * adim + tw.b - tw.iota_N


@dataclass(frozen=True)
class Prediction:
    value: int
    case: Case
    trace: dict = field(default_factory=dict)

    def recompute(self) -> int:
        t = self.trace
        tw = TwinSummary(t["n"], (), (), t["a"], t["b"], t["iota"], t["iota_K"], t["iota_N"])
        return formula_value(self.case, t["n"], t["adim"], tw)


def _check_factors(g: Graph, h: Graph) -> None:
    if g.order < 2:
        raise GraphError("G must have at least two vertices")
    if h.order < 2:
        raise GraphError("H must have at least two vertices")
    if not is_connected(g):
        raise GraphError("G must be connected")


def _prediction(case: Case, n: int, adim: int, tw: TwinSummary, formula: Optional[str] = None) -> Prediction:
    trace = {
        "n": n,
        "adim": adim,
        "a": tw.a,
        "b": tw.b,
        "iota": tw.iota,
        "iota_K": tw.iota_K,
        "iota_N": tw.iota_N,
        "formula": formula or FORMULAS[case],
    }
    return Prediction(formula_value(case, n, adim, tw), case, trace)


def predict_dim_lex(g: Graph, h: Graph, report: Optional[BasisReport] = None) -> Prediction:
    _check_factors(g, h)
    report = report or all_adjacency_bases(h)
    return _prediction(report.case, g.order, report.adim, twin_partition(g))


def predict_family_path_cycle(g: Graph, m: int, which: str = "path", complemented: bool = False) -> Prediction:
    """dim(G[H]) for H a path or cycle on ``m`` vertices (or its complement).

    Uses only ``m mod 5``: the adjacency dimension is ``(2m+2)//5`` and the
    case depends on the parity of the remainder, with ``m = 6`` special.
    """
    if which not in ("path", "cycle"):
        raise GraphError("which must be 'path' or 'cycle'")
    if m < 4:
        raise GraphError("the path/cycle formula needs m >= 4")
    if g.order < 2 or not is_connected(g):
        raise GraphError("G must be connected with at least two vertices")
    adim = (2 * m + 2) // 5
    r = m % 5
    if r % 2 == 0:
        case = Case.BOTH_AVOIDABLE
    elif m == 6:
        case = Case.ALL_BASES_BOTH
    else:
        case = Case.ALL_BASES_ONES if complemented else Case.ALL_BASES_TWOS
    tw = twin_partition(g)
    pred = _prediction(case, g.order, adim, tw)
    if m == 6:
        # same number, written the way the m = 6 rule reads
        pred.trace["formula"] = "n*adim+a+b-iota_K-iota_N"
        assert pred.value == g.order * adim + tw.a + tw.b - tw.iota_K - tw.iota_N
    return pred


@dataclass
class VerificationReport:
    g: str
    h: str
    n: int
    m: int
    predicted: Prediction
    closed_form: Optional[int] = None
    closed_form_row: Optional[str] = None
    brute_force: Optional[int] = None
    witness: Optional[tuple[int, ...]] = None
    millis: float = 0.0

    @property
    def verified(self) -> bool:
        return self.brute_force is not None

    @property
    def agree_pred(self) -> Optional[bool]:
        return None if self.brute_force is None else self.predicted.value == self.brute_force

    @property
    def agree_table(self) -> Optional[bool]:
        if self.closed_form is None:
            return None
        reference = self.brute_force if self.brute_force is not None else self.predicted.value
        return self.closed_form == reference

    def check(self) -> None:
        if self.agree_pred is False:
            raise VerificationError(
                f"dim({self.g}[{self.h}]): predicted {self.predicted.value}, exhaustive search {self.brute_force}"
            )

    def to_record(self) -> dict:
        return {
            "g": self.g,
            "h": self.h,
            "n": self.n,
            "m": self.m,
            "case": self.predicted.case.value,
            "predicted": self.predicted.value,
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "agree_pred": self.agree_pred,
            "agree_table": self.agree_table,
            "millis": round(self.millis, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record())


def verify(
    g: Graph,
    h: Graph,
    budget: int = DEFAULT_BUDGET,
    g_name: str = "G",
    h_name: str = "H",
    g_family=None,
    h_family=None,
) -> VerificationReport:
    """Predict dim(G[H]) and, within ``budget`` product vertices, confirm it exhaustively.

    ``g_family``/``h_family`` are optional :class:`~lexdim.tables.Family`
    descriptors; when both are given the closed-form table is consulted too.
    """
    from .tables import TableError, closed_form_dim_lex

    start = time.perf_counter()
    pred = predict_dim_lex(g, h)
    rep = VerificationReport(g_name, h_name, g.order, h.order, pred)
    if g_family is not None and h_family is not None:
        try:
            tv = closed_form_dim_lex(g_family, h_family)
            rep.closed_form, rep.closed_form_row = tv.value, tv.row
        except TableError:
            pass
    if g.order * h.order <= budget:
        rep.brute_force, rep.witness = dimension(lex_product(g, h), Mode.METRIC)
    rep.millis = (time.perf_counter() - start) * 1000
    return rep
