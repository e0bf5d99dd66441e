"""Recursive-descent parser for the command-line series language.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := RAT | 'x' | '(' expr ')' | FUNC '(' args ')' | 'catalan'
    RAT    := INT ('/' INT)?

Functions: pow(e, RAT), log(e), exp(e), sqrt(e), rev(e),
genbin(RAT, RAT), catalan.  Rational arguments of functions may carry a
leading minus sign (the expression grammar itself has no unary minus).
Parse errors carry the offending position.
"""

from __future__ import annotations

from fractions import Fraction

from .fps import Q, Series

FUNCTIONS = ("pow", "log", "exp", "sqrt", "rev", "genbin", "catalan")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos


def _tokenize(text: str):
    out = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        if c in "+-*/(),":
            out.append(_Token(c, c, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % c, i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def next(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError("expected %r, found %r" % (kind, tok.text or "end"), tok.pos)
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError("trailing input %r" % tok.text, tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            rhs = self.term()
            node = ("add" if op == "+" else "sub", node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.next().kind
            rhs = self.factor()
            node = ("mul" if op == "*" else "div", node, rhs)
        return node

    def rational(self) -> Fraction:
        sign = 1
        if self.peek().kind == "-":
            self.next()
            sign = -1
        num = self.expect("int")
        value = Q(int(num.text))
        # a '/' continues the literal only when an integer follows;
        # otherwise it is term-level division
        if self.peek().kind == "/" and self.tokens[self.k + 1].kind == "int":
            self.next()
            den = self.next()
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.pos)
            value = Q(int(num.text), int(den.text))
        return sign * value

    def factor(self):
        tok = self.peek()
        if tok.kind == "int":
            return ("num", self.rational())
        if tok.kind == "(":
            self.next()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "name":
            self.next()
            name = tok.text
            if name == "x":
                return ("x",)
            if name not in FUNCTIONS:
                raise ParseError("unknown name %r" % name, tok.pos)
            if name == "catalan":
                if self.peek().kind == "(":
                    self.next()
                    self.expect(")")
                return ("catalan",)
            self.expect("(")
            if name == "pow":
                inner = self.expr()
                self.expect(",")
                exponent = self.rational()
                self.expect(")")
                return ("pow", inner, exponent)
            if name == "genbin":
                beta = self.rational()
                self.expect(",")
                phi = self.rational()
                self.expect(")")
                return ("genbin", beta, phi)
            inner = self.expr()
            self.expect(")")
            return (name, inner)
        raise ParseError("expected a factor, found %r" % (tok.text or "end"), tok.pos)


def parse(text: str):
    """Parse to an AST of nested tuples."""
    return _Parser(text).parse()


def evaluate(node, order: int) -> Series:
    """Evaluate an AST at the requested truncation order."""
    from .genlagrange import gen_binomial_series

    kind = node[0]
    if kind == "num":
        return Series.const(node[1], order)
    if kind == "x":
        return Series.x(order)
    if kind in ("add", "sub", "mul", "div"):
        lhs = evaluate(node[1], order)
        rhs = evaluate(node[2], order)
        if kind == "add":
            return lhs + rhs
        if kind == "sub":
            return lhs - rhs
        if kind == "mul":
            return lhs * rhs
        return lhs / rhs
    if kind == "pow":
        return evaluate(node[1], order).pow(node[2])
    if kind == "log":
        return evaluate(node[1], order).log()
    if kind == "exp":
        return evaluate(node[1], order).exp()
    if kind == "sqrt":
        return evaluate(node[1], order).sqrt()
    if kind == "rev":
        return evaluate(node[1], order).reversion()
    if kind == "genbin":
        return gen_binomial_series(node[1], node[2], order)
    if kind == "catalan":
        return gen_binomial_series(2, 1, order)
    raise ValueError("unknown node %r" % (kind,))


def parse_series(text: str, order: int) -> Series:
    return evaluate(parse(text), order)
