"""Parser for manifold expressions.

    expr   := term ("+" term)*
    term   := factor ("*" factor)*
    factor := "RP(" int ")" ["^H"] | "p(" int ")" | "0(" int ")"

``+`` is disjoint union, ``*`` is product, ``^H`` twists a factor by its Hopf
bundle, ``p(i)`` means ``RP(i)^H`` and ``0(m)`` is the empty class in
dimension m.  Whitespace is ignored.
"""

from __future__ import annotations

import re

from .manifold import Component, ManifoldDescriptor, ProjectiveFactor


class ExprError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


_TOKEN = re.compile(r"\s*(?:(R\s*P\s*\(|p\s*\(|0\s*\()|(\d+)|(\))|(\^\s*H)|(\+)|(\*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            ws = len(text[pos:]) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[pos + ws]!r}", pos + ws)
        kind = ("open", "int", "close", "hopf", "plus", "times")[mt.lastindex - 1]
        value = re.sub(r"\s+", "", mt.group(mt.lastindex))
        tokens.append((kind, value, mt.start(mt.lastindex)))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str, what: str):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprError(f"expected {what}, found {found}", tok[2])
        self.i += 1
        return tok

    def factor(self) -> tuple[int, ProjectiveFactor | None]:
        head = self.take("open", "'RP(', 'p(' or '0('")
        dim = int(self.take("int", "a nonnegative integer")[1])
        self.take("close", "')'")
        if head[1] == "0(":
            return dim, None
        twisted = head[1] == "p("
        if head[1] == "RP(" and self.peek()[0] == "hopf":
            self.i += 1
            twisted = True
        return dim, ProjectiveFactor(dim, twisted)

    def term(self) -> tuple[int, Component | None, int]:
        start = self.peek()[2]
        dims, factors, empty = [], [], False
        while True:
            dim, f = self.factor()
            dims.append(dim)
            if f is None:
                empty = True
            else:
                factors.append(f)
            if self.peek()[0] != "times":
                break
            self.i += 1
        total = sum(dims)
        if empty:
            return total, None, start
        return total, Component(tuple(factors)), start

    def expr(self) -> ManifoldDescriptor:
        terms = [self.term()]
        while self.peek()[0] == "plus":
            self.i += 1
            terms.append(self.term())
        self.take("end", "'+', '*' or end of input")
        m = terms[0][0]
        for dim, _, pos in terms[1:]:
            if dim != m:
                raise ExprError(f"dimension mismatch ({m} vs {dim})", pos)
        return ManifoldDescriptor(m, tuple(c for _, c, _ in terms if c is not None))


def parse_expr(text: str) -> ManifoldDescriptor:
    return _Parser(text).expr()
