"""Closed-form values of dim(G[H]) for named families.

This path is deliberately independent of :mod:`lexdim.lex`: it never looks
at a graph, only at family parameters, and reproduces the published case
tables row by row.  Each lookup returns the value together with the name of
the row that fired, so disagreements with the exhaustive search can be
traced to a specific row.

Notation used in the row names: ``n`` is the order of ``G`` and ``m`` the
order of ``H``; ``f = (2m+2)//5`` and ``r = m % 5``.  For a complete
multipartite ``G = K(n_1..n_t)``, ``j`` counts parts with at least two
vertices; for ``H = K(m_1..m_s)``, ``q`` does the same.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import generators
from .graph import Graph, complement

PRINTED = "printed"
ALTERNATE = "alternate"


class TableError(ValueError):
    """The family pair is outside every table."""


@dataclass(frozen=True)
class Family:
    """A named graph: ``kind`` in path, cycle, complete, empty, multipartite, petersen."""

    kind: str
    params: tuple[int, ...] = ()
    complemented: bool = False

    def normalized(self) -> Family:
        kind, params, comp = self.kind, self.params, self.complemented
        if kind == "multipartite":
            if all(p == 1 for p in params):
                kind, params = "complete", (len(params),)
            elif len(params) == 1:
                kind = "empty"
        if comp and kind == "complete":
            kind, comp = "empty", False
        elif comp and kind == "empty":
            kind, comp = "complete", False
        return Family(kind, tuple(params), comp)

    @property
    def order(self) -> int:
        if self.kind == "petersen":
            return 10
        if self.kind == "multipartite":
            return sum(self.params)
        return self.params[0]

    def build(self) -> Graph:
        makers = {
            "path": lambda: generators.path(self.params[0]),
            "cycle": lambda: generators.cycle(self.params[0]),
            "complete": lambda: generators.complete(self.params[0]),
            "empty": lambda: generators.empty(self.params[0]),
            "multipartite": lambda: generators.complete_multipartite(self.params),
            "petersen": generators.petersen,
        }
        g = makers[self.kind]()
        return complement(g) if self.complemented else g

    def __str__(self) -> str:
        base = {
            "path": lambda: f"P{self.params[0]}",
            "cycle": lambda: f"C{self.params[0]}",
            "complete": lambda: f"K{self.params[0]}",
            "empty": lambda: f"E{self.params[0]}",
            "multipartite": lambda: "K(" + ",".join(map(str, self.params)) + ")",
            "petersen": lambda: "petersen",
        }[self.kind]()
        return f"comp({base})" if self.complemented else base


class TableValue(NamedTuple):
    value: int
    table: str
    row: str


def _parts(params) -> tuple[int, int, int]:
    """(total, number of parts, number of parts of size >= 2)."""
    return sum(params), len(params), sum(p >= 2 for p in params)


def _g_family(g: Family) -> Family:
    g = g.normalized()
    if g.complemented:
        raise TableError(f"no table has G = {g}")
    if g.kind == "complete" and g.params[0] >= 2:
        return g
    if g.kind == "path" and g.params[0] >= 2:
        return g
    if g.kind == "cycle" and g.params[0] >= 3:
        return g
    if g.kind == "multipartite" and len(g.params) >= 2:
        return g
    raise TableError(f"no table has G = {g}")


def _paths_cycles(g: Family, h: Family, reading: str) -> tuple[int, str]:
    n = g.order
    m = h.params[0]
    f, r = (2 * m + 2) // 5, m % 5
    odd = r % 2 == 1
    name = ("P" if h.kind == "path" else "C") + str(m)
    small = name in ("P2", "P3", "P6", "C6")
    if g.kind == "complete":
        if name in ("P2", "P3"):
            return 2 * n - 1, "H in {P2,P3}: 2n-1"
        if name in ("C3", "P6", "C6"):
            return 3 * n - 1, "H in {C3,P6,C6}: 3n-1"
        return n * f, "otherwise: nf"
    if g.kind == "path":
        if name == "C3":
            return (5, "n=2, H=C3: 5") if n == 2 else (2 * n, "n!=2, H=C3: 2n")
        if n == 2 and small:
            return n * f + 1, "n=2, H in {P2,P3,P6,C6}: nf+1"
        if n == 3 and odd:
            return n * f + 1, "n=3, r odd, H!=C3: nf+1"
        return n * f, "otherwise: nf"
    if g.kind == "cycle":
        if name == "C3":
            return (8, "n=3, H=C3: 8") if n == 3 else (2 * n, "n!=3, H=C3: 2n")
        if n == 3 and small:
            return n * f + 2, "n=3, H in {P2,P3,P6,C6}: nf+2"
        if n == 4 and odd:
            return n * f + 2, "n=4, r odd, H!=C3: nf+2"
        return n * f, "otherwise: nf"
    n, t, j = _parts(g.params)
    if name == "P2" and j != t:
        return n * f + t - j - 1, "H=P2, j!=t: nf+t-j-1"
    if name == "C3":
        if j != t:
            return n * (m - 1) + t - j - 1, "H=C3, j!=t: n(m-1)+t-j-1"
        return n * (m - 1), "H=C3, j=t: n(m-1)"
    if name in ("P3", "P6", "C6"):
        if j != t:
            if reading == ALTERNATE:
                return n * f + t - j - 1, "H in {P3,P6,C6}, j!=t: nf+t-j-1 (alternate)"
            return n * f + n - j - 1, "H in {P3,P6,C6}, j!=t: nf+n-j-1"
        return n * f + n - t, "H in {P3,P6,C6}, j=t: nf+n-t"
    if m >= 7 and odd:
        return n * f + n - t, "m>=7, r odd: nf+n-t"
    return n * f, "otherwise: nf"


def _comp_paths_cycles(g: Family, h: Family, reading: str) -> tuple[int, str]:
    n = g.order
    m = h.params[0]
    f, r = (2 * m + 2) // 5, m % 5
    odd = r % 2 == 1
    name = ("P" if h.kind == "path" else "C") + str(m)
    small = name in ("P2", "P3", "P6", "C6")
    if g.kind == "complete":
        if name == "C3":
            return 2 * n, "H=comp C3: 2n"
        if odd:
            return n * f + n - 1, "H!=comp C3, r odd: nf+n-1"
        return n * f, "otherwise: nf"
    if g.kind == "path":
        if n == 2 and name == "C3":
            return 4, "n=2, H=comp C3: 4"
        if n == 2 and odd:
            return n * f + 1, "n=2, r odd, H!=comp C3: nf+1"
        if n == 3 and small:
            return n * f + 1, "n=3, H in comp{P2,P3,P6,C6}: nf+1"
        if n == 3 and name == "C3":
            return 7, "n=3, H=comp C3: 7"
        if n >= 4 and name == "C3":
            return n * (m - 1), "n>=4, H=comp C3: n(m-1)"
        return n * f, "otherwise: nf"
    if g.kind == "cycle":
        if n == 3 and name == "C3":
            return 6, "n=3, H=comp C3: 6"
        if n == 3:
            return n * f + 2, "n=3, H!=comp C3: nf+2"
        if n == 4 and small:
            return n * f + 2, "n=4, H in comp{P2,P3,P6,C6}: nf+2"
        if n == 4 and name == "C3":
            return 10, "n=4, H=comp C3: 10"
        if n >= 5 and name == "C3":
            return n * (m - 1), "n>=5, H=comp C3: n(m-1)"
        return n * f, "otherwise: nf"
    n, t, j = _parts(g.params)
    if name == "P2":
        return n * f + n - t, "H=comp P2: nf+n-t"
    if name == "C3":
        return n * (m - 1) + n - t, "H=comp C3: n(m-1)+n-t"
    if name in ("P3", "P6", "C6"):
        if j != t:
            if reading == ALTERNATE:
                return n * f + t - j - 1, "H in comp{P3,P6,C6}, j!=t: nf+t-j-1 (alternate)"
            return n * f + n - j - 1, "H in comp{P3,P6,C6}, j!=t: nf+n-j-1"
        return n * f + n - t, "H in comp{P3,P6,C6}, j=t: nf+n-t"
    if m >= 7 and odd and j != t:
        return n * f + t - j - 1, "m>=7, r odd, j!=t: nf+t-j-1"
    return n * f, "otherwise: nf"


def _complete_empty(g: Family, h: Family) -> tuple[int, str]:
    n = g.order
    m = h.params[0]
    if h.kind == "complete":
        if g.kind == "complete":
            return n * m - 1, "K_n[K_m]: nm-1"
        if g.kind == "path":
            return (n * (m - 1), "n>=3: n(m-1)") if n >= 3 else (n * (m - 1) + 1, "n=2: n(m-1)+1")
        if g.kind == "cycle":
            return (n * (m - 1), "n>=4: n(m-1)") if n >= 4 else (n * (m - 1) + 2, "n=3: n(m-1)+2")
        n, t, j = _parts(g.params)
        if j != t:
            return n * (m - 1) + t - j - 1, "j!=t: n(m-1)+t-j-1"
        return n * (m - 1), "j=t: n(m-1)"
    if g.kind == "complete":
        return n * (m - 1), "K_n[E_m]: n(m-1)"
    if g.kind == "path":
        return (n * (m - 1) + 1, "n=3: n(m-1)+1") if n == 3 else (n * (m - 1), "n!=3: n(m-1)")
    if g.kind == "cycle":
        return (n * (m - 1) + 2, "n=4: n(m-1)+2") if n == 4 else (n * (m - 1), "n!=4: n(m-1)")
    n, t, _ = _parts(g.params)
    return n * (m - 1) + n - t, "n(m-1)+n-t"


def _multipartite(g: Family, h: Family) -> tuple[int, str]:
    n = g.order
    m, s, q = _parts(h.params)
    if q == s:
        return n * (m - q), "q=s: n(m-q)"
    if not h.complemented:
        if g.kind == "complete":
            return n * (m - q) - 1, "q!=s: n(m-q)-1"
        if g.kind == "path":
            if n >= 3:
                return n * (m - q - 1), "q!=s, n>=3: n(m-q-1)"
            return n * (m - q - 1) + 1, "otherwise: n(m-q-1)+1"
        if g.kind == "cycle":
            if n >= 4:
                return n * (m - q - 1), "q!=s, n>=4: n(m-q-1)"
            return n * (m - q - 1) + 2, "otherwise: n(m-q-1)+2"
        n, t, j = _parts(g.params)
        if j == t:
            return n * (m - q - 1), "q!=s, j=t: n(m-q-1)"
        return n * (m - q - 1) + t - j - 1, "otherwise: n(m-q-1)+t-j-1"
    if g.kind == "complete":
        return n * (m - q - 1), "q!=s: n(m-q-1)"
    if g.kind == "path":
        if n != 3:
            return n * (m - q - 1), "q!=s, n!=3: n(m-q-1)"
        return n * (m - q - 1) + 1, "otherwise: n(m-q-1)+1"
    if g.kind == "cycle":
        if n != 4:
            return n * (m - q - 1), "q!=s, n!=4: n(m-q-1)"
        return n * (m - q - 1) + 2, "otherwise: n(m-q-1)+2"
    n, t, _ = _parts(g.params)
    return n * (m - q) - t, "q!=s: n(m-q)-t"


def _petersen(g: Family, h: Family) -> tuple[int, str]:
    n = g.order
    if not h.complemented:
        if g.kind == "complete":
            return 3 * n, "K_n[P]: 3n"
        if g.kind == "path":
            return (3 * n + 1, "n=3: 3n+1") if n == 3 else (3 * n, "n!=3: 3n")
        if g.kind == "cycle":
            return (3 * n + 2, "n=4: 3n+2") if n == 4 else (3 * n, "n!=4: 3n")
        n, t, _ = _parts(g.params)
        return 4 * n - t, "4n-t"
    if g.kind == "complete":
        return 4 * n - 1, "K_n[comp P]: 4n-1"
    if g.kind == "path":
        return (7, "n=2: 7") if n == 2 else (3 * n, "n>=3: 3n")
    if g.kind == "cycle":
        return (11, "n=3: 11") if n == 3 else (3 * n, "n>=4: 3n")
    n, t, j = _parts(g.params)
    if j != t:
        return 3 * n + t - j - 1, "j!=t: 3n+t-j-1"
    return 3 * n, "j=t: 3n"


def closed_form_dim_lex(g: Family, h: Family, reading: str = PRINTED) -> TableValue:
    """Table value of dim(G[H]).

    ``reading`` selects how the multipartite-G rows for H in {P3, P6, C6}
    (and complements) are read: ``"printed"`` uses ``n-j-1`` as published,
    ``"alternate"`` uses ``t-j-1`` like the neighbouring P2 row.
    """
    if reading not in (PRINTED, ALTERNATE):
        raise ValueError(f"unknown reading {reading!r}")
    g = _g_family(g)
    h = h.normalized()
    if h.kind in ("path", "cycle"):
        if h.params[0] < (3 if h.kind == "cycle" else 2):
            raise TableError(f"no table has H = {h}")
        table = "complemented-paths-cycles" if h.complemented else "paths-cycles"
        fn = _comp_paths_cycles if h.complemented else _paths_cycles
        value, row = fn(g, h, reading)
    elif h.kind in ("complete", "empty") and h.params[0] >= 2:
        table = "complete-empty"
        value, row = _complete_empty(g, h)
    elif h.kind == "multipartite":
        table = "multipartite"
        value, row = _multipartite(g, h)
    elif h.kind == "petersen":
        table = "petersen"
        value, row = _petersen(g, h)
    else:
        raise TableError(f"no table has H = {h}")
    return TableValue(value, table, row)
