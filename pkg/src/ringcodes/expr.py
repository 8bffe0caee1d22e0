"""Parser for polynomials in x with coefficients in R.

Grammar (juxtaposition is multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := atom ['^' integer]
    atom   := integer | 'u' | 'v' | 'x' | '(' expr ')'

Examples: ``x^4+x^3+3x^2+2x+1``, ``1+3u+3v+uv``, ``(1-u)(x^2+x+1)+2``,
``uvx^3+2uvx^2+x+1``.  Integer coefficients are reduced mod 4.
"""

from __future__ import annotations

import re

from .exceptions import ParseError
from .ring import ONE, U, V, ZERO, from_coeff
from .z4 import Z4Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([uvx])|(\^|\(|\)|\+|-|\*))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        tokens.append((m.group(m.lastindex), start))
        pos = m.end()
    tokens.append(("$", len(text)))
    return tokens


# R-polynomials are dicts {degree: RElement}
def _padd(p, q, sign=1):
    out = dict(p)
    for k, c in q.items():
        out[k] = out.get(k, ZERO) + (c if sign > 0 else -c)
    return {k: c for k, c in out.items() if not c.is_zero()}


def _pmul(p, q):
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, ZERO) + a * b
    return {k: c for k, c in out.items() if not c.is_zero()}


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        raise ParseError(message, self.text, self.tokens[self.i][1])

    def parse(self):
        if self.peek() == "$":
            self.fail("empty expression")
        p = self.expr()
        if self.peek() != "$":
            self.fail(f"unexpected {self.peek()!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
        p = self.term()
        if sign < 0:
            p = _padd({}, p, -1)
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            p = _padd(p, self.term(), 1 if op == "+" else -1)
        return p

    def _starts_factor(self):
        t = self.peek()
        return t.isdigit() or t in ("u", "v", "x", "(")

    def term(self):
        p = self.factor()
        while True:
            if self.peek() == "*":
                self.take()
                p = _pmul(p, self.factor())
            elif self._starts_factor():
                p = _pmul(p, self.factor())
            else:
                return p

    def factor(self):
        p = self.atom()
        if self.peek() == "^":
            self.take()
            tok, _ = self.tokens[self.i]
            if not tok.isdigit():
                self.fail("expected integer exponent")
            self.take()
            out = {0: ONE}
            for _ in range(int(tok)):
                out = _pmul(out, p)
            p = out
        return p

    def atom(self):
        tok, _ = self.tokens[self.i]
        if tok.isdigit():
            self.take()
            c = from_coeff(int(tok) % 4)
            return {0: c} if not c.is_zero() else {}
        if tok == "u":
            self.take()
            return {0: U}
        if tok == "v":
            self.take()
            return {0: V}
        if tok == "x":
            self.take()
            return {1: ONE}
        if tok == "(":
            self.take()
            p = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.take()
            return p
        self.fail(f"unexpected {tok!r}" if tok != "$" else "unexpected end of input")


def parse_r_polynomial(text):
    """Coefficient list (lowest degree first) of an R[x] expression, trailing zeros trimmed."""
    p = _Parser(text).parse()
    if not p:
        return []
    coeffs = [ZERO] * (max(p) + 1)
    for k, c in p.items():
        coeffs[k] = c
    return coeffs


def parse_polynomial(text, scalar=False):
    """Parse an expression; with ``scalar=True`` return a :class:`Z4Poly`."""
    coeffs = parse_r_polynomial(text)
    if not scalar:
        return coeffs
    for c in coeffs:
        if not c.is_scalar():
            raise ParseError(f"coefficient {c} is not in Z4", text, 0)
    return Z4Poly(c.coeff[0] for c in coeffs)


def parse_element(text):
    coeffs = parse_r_polynomial(text)
    if len(coeffs) > 1:
        raise ParseError("ring element must not contain x", text, text.find("x"))
    return coeffs[0] if coeffs else ZERO
