"""Text syntax for expressions.

Grammar::

    expr    := term (op term)*            one operator per chain; mix needs parens
    op      := '+' | '*' | '/'
    term    := label | '(' expr ')'
             | 'du' '(' expr (',' expr)+ (';' arclist)? ')'
             | 'blk' '(' label (',' label)* (';' arclist)? ')'
    arclist := label '->' label (',' label '->' label)*
    label   := [A-Za-z0-9_]+

``blk`` embeds an arbitrary digraph verbatim (an opaque block).
"""
from __future__ import annotations

import re

from ..digraph import Digraph, GraphError
from .ast import Block, Expr, ExprError, Leaf, Node, Op, postorder, validate


class ParseError(ExprError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(->)|([A-Za-z0-9_]+)|([()+*/,;]))")
_OPS = {"+": Op.UNION, "*": Op.SERIES, "/": Op.ORDER}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("arrow", "->", start))
        elif m.group(2):
            tokens.append(("label", m.group(2), start))
        else:
            tokens.append(("punct", m.group(3), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind == "label":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def expr(self) -> Expr:
        first = self.term()
        kind, val, pos = self.peek()
        if not (kind == "punct" and val in _OPS):
            return first
        op = _OPS[val]
        operands = [first]
        while True:
            kind, val, pos = self.peek()
            if kind == "punct" and val in _OPS:
                if _OPS[val] is not op:
                    raise ParseError(
                        f"mixed operators {op.value!r} and {val!r} need parentheses", pos)
                self.take()
                operands.append(self.term())
            else:
                break
        return Node(op, tuple(operands))

    def term(self) -> Expr:
        kind, val, pos = self.peek()
        if kind == "label":
            nxt = self.peek(1)
            if val == "du" and nxt[1] == "(":
                return self.directed_union()
            if val == "blk" and nxt[1] == "(":
                return self.block()
            self.take()
            return Leaf(val)
        if val == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"expected a label or '(', found {val or 'end of input'!r}", pos)

    def arclist(self) -> list[tuple[str, str]]:
        arcs = []
        if self.peek()[1] == ")":
            return arcs
        while True:
            u = self.label()
            kind, val, pos = self.take()
            if kind != "arrow":
                raise ParseError(f"expected '->', found {val or 'end of input'!r}", pos)
            v = self.label()
            arcs.append((u, v))
            if self.peek()[1] != ",":
                return arcs
            self.take()

    def label(self) -> str:
        kind, val, pos = self.take()
        if kind != "label":
            raise ParseError(f"expected a label, found {val or 'end of input'!r}", pos)
        return val

    def directed_union(self) -> Expr:
        _, _, pos = self.take()
        self.expect("(")
        operands = [self.expr()]
        while self.peek()[1] == ",":
            self.take()
            operands.append(self.expr())
        if len(operands) < 2:
            raise ParseError("du needs at least two operands", pos)
        arcs: list[tuple[str, str]] = []
        if self.peek()[1] == ";":
            self.take()
            arcs = self.arclist()
        self.expect(")")
        return Node(Op.DIRECTED, tuple(operands), frozenset(arcs))

    def block(self) -> Expr:
        _, _, pos = self.take()
        self.expect("(")
        names = [self.label()]
        while self.peek()[1] == ",":
            self.take()
            names.append(self.label())
        arcs: list[tuple[str, str]] = []
        if self.peek()[1] == ";":
            self.take()
            arcs = self.arclist()
        self.expect(")")
        if len(set(names)) != len(names):
            raise ParseError("duplicate label inside blk", pos)
        try:
            return Block(Digraph(names, arcs))
        except GraphError as exc:
            raise ParseError(str(exc), pos) from None


def parse_expr(text: str) -> Expr:
    """Parse an expression and validate labels and cross arcs."""
    p = _Parser(text)
    e = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    validate(e)
    return e


def _arcs_text(arcs) -> str:
    return ", ".join(f"{u}->{v}" for u, v in sorted(arcs))


def format_expr(e: Expr) -> str:
    """Fully parenthesised text form; ``parse_expr`` inverts it."""
    text: dict[Expr, str] = {}
    for node in postorder(e):
        if isinstance(node, Leaf):
            text[node] = node.label
        elif isinstance(node, Block):
            body = ", ".join(node.graph.ordered_vertices())
            if node.graph.arcs:
                body += "; " + _arcs_text(node.graph.arcs)
            text[node] = f"blk({body})"
        elif node.op is Op.DIRECTED:
            body = ", ".join(text[c] for c in node.children)
            text[node] = f"du({body}; {_arcs_text(node.cross_arcs)})" if node.cross_arcs else f"du({body})"
        else:
            text[node] = "(" + f" {node.op.value} ".join(text[c] for c in node.children) + ")"
    return text[e]
