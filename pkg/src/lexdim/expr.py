"""A small expression language for naming graphs on the command line.

::

    expr := "P"INT | "C"INT | "K"INT | "E"INT
          | "K(" INT ("," INT)* ")" | "KG(" INT "," INT ")" | "petersen"
          | "comp(" expr ")" | "line(" expr ")" | "lex(" expr "," expr ")"
          | "file:" PATH

Whitespace between tokens is ignored.  A ``file:`` path runs up to the next
``,`` or ``)``.  Generator preconditions are checked while parsing, so
``KG(4,2)`` is rejected before anything is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import generators
from .graph import Graph, GraphError, complement, line_graph, read_edge_list
from .lex import lex_product
from .tables import Family


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text[:pos]}<here>{text[pos:]}")
        self.pos = pos


@dataclass(frozen=True)
class Expr:
    """AST node.  ``op`` is one of P, C, K, E, parts, KG, petersen, comp, line, lex, file."""

    op: str
    args: tuple[Union[int, str, Expr], ...] = ()

    def __str__(self) -> str:
        op, args = self.op, self.args
        if op in ("P", "C", "K", "E"):
            return f"{op}{args[0]}"
        if op == "parts":
            return "K(" + ",".join(map(str, args)) + ")"
        if op == "KG":
            return f"KG({args[0]},{args[1]})"
        if op == "petersen":
            return "petersen"
        if op == "file":
            return f"file:{args[0]}"
        return f"{op}(" + ", ".join(map(str, args)) + ")"


_LEAF_CHECKS = {
    "P": (1, "path needs n >= 1"),
    "C": (3, "cycle needs n >= 3"),
    "K": (1, "complete graph needs n >= 1"),
    "E": (1, "empty graph needs n >= 1"),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str, pos: Optional[int] = None):
        raise ExprSyntaxError(message, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            self.fail(f"expected {s!r}")
        self.pos += len(s)

    def opens(self, word: str) -> bool:
        """Consume ``word`` followed by ``(``, allowing whitespace between them."""
        save = self.pos
        if self.peek(word):
            self.pos += len(word)
            if self.peek("("):
                self.pos += 1
                return True
        self.pos = save
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self) -> Expr:
        self.skip()
        for word in ("comp", "line"):
            if self.opens(word):
                inner = self.expr()
                self.expect(")")
                return Expr(word, (inner,))
        if self.opens("lex"):
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Expr("lex", (left, right))
        if self.peek("petersen"):
            self.pos += len("petersen")
            return Expr("petersen")
        if self.peek("file:"):
            self.pos += 5
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] not in ",)":
                self.pos += 1
            path = self.text[start:self.pos].strip()
            if not path:
                self.fail("empty file path", start)
            return Expr("file", (path,))
        self.skip()
        at = self.pos
        if self.opens("KG"):
            k = self.integer()
            self.expect(",")
            r = self.integer()
            self.expect(")")
            if r < 1 or k < 2 * r + 1:
                raise GraphError(f"KG({k},{r}) at position {at}: requires r >= 1 and k >= 2r+1")
            return Expr("KG", (k, r))
        if self.opens("K"):
            parts = [self.integer()]
            while self.peek(","):
                self.pos += 1
                parts.append(self.integer())
            self.expect(")")
            if any(p < 1 for p in parts):
                raise GraphError(f"K(...) at position {at}: every part needs at least one vertex")
            return Expr("parts", tuple(parts))
        for op, (least, message) in _LEAF_CHECKS.items():
            if self.peek(op):
                at = self.pos
                self.pos += 1
                n = self.integer()
                if n < least:
                    raise GraphError(f"{op}{n} at position {at}: {message}")
                return Expr(op, (n,))
        self.fail("expected a graph expression")

    def parse(self) -> Expr:
        e = self.expr()
        self.skip()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")
        return e


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def evaluate(e: Expr) -> Graph:
    op, args = e.op, e.args
    if op == "P":
        return generators.path(args[0])
    if op == "C":
        return generators.cycle(args[0])
    if op == "K":
        return generators.complete(args[0])
    if op == "E":
        return generators.empty(args[0])
    if op == "parts":
        return generators.complete_multipartite(args)
    if op == "KG":
        return generators.kneser(*args)
    if op == "petersen":
        return generators.petersen()
    if op == "comp":
        return complement(evaluate(args[0]))
    if op == "line":
        return line_graph(evaluate(args[0]))
    if op == "lex":
        return lex_product(evaluate(args[0]), evaluate(args[1]))
    if op == "file":
        try:
            return read_edge_list(args[0])
        except OSError as exc:
            raise GraphError(f"cannot read {args[0]}: {exc}") from None
    raise AssertionError(op)


def to_graph(text: str) -> Graph:
    return evaluate(parse_expr(text))


def family_of(e: Expr) -> Optional[Family]:
    """The named family an expression denotes, or None (products, files, line graphs)."""
    op, args = e.op, e.args
    simple = {"P": "path", "C": "cycle", "K": "complete", "E": "empty"}
    if op in simple:
        return Family(simple[op], (args[0],))
    if op == "parts":
        return Family("multipartite", tuple(args))
    if op == "petersen" or (op == "KG" and tuple(args) == (5, 2)):
        return Family("petersen")
    if op == "comp":
        inner = family_of(args[0])
        if inner is None:
            return None
        return Family(inner.kind, inner.params, not inner.complemented)
    return None
