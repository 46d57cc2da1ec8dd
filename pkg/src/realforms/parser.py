"""Parsing and formatting of binary-form expressions.

Grammar (whitespace is ignored between tokens)::

    form     = sum ;
    sum      = term , { ("+" | "-") , term } ;
    term     = unary , { "*" , unary } ;
    unary    = ("+" | "-") , unary | power ;
    power    = atom , [ "^" , integer ] ;
    atom     = rational | "x" | "y" | "(" , sum , ")" ;
    rational = integer , [ "/" , integer ] ;
    integer  = digit , { digit } ;

``^`` binds tighter than ``*``, and unary minus applies to a whole power, so
``-x^2`` is ``-(x^2)``. Multiplication must be written out (``x*y``, ``2*x``).
A ``/`` is only allowed inside a rational literal such as ``3/4``. Decimal
literals are rejected. The expanded result must be homogeneous and nonzero.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .errors import HomogeneityError, ParseError
from .forms import BinaryForm

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^()])|(?P<bad>\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "num" and "." in value:
            raise ParseError("decimal literals are not exact; write a rational like 3/2", text, start)
        if kind == "name" and value not in ("x", "y"):
            hint = ""
            if set(value) <= {"x", "y"}:
                hint = "; write products explicitly, e.g. " + "*".join(value)
            raise ParseError(f"unknown identifier {value!r}{hint}", text, start)
        if kind == "op" and value == "**":
            raise ParseError("use '^' for powers", text, start)
        if kind == "bad":
            raise ParseError(f"unexpected character {value!r}", text, start)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# polynomials during parsing: dict {(deg_x, deg_y): Fraction}

def _padd(p, q, sign=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + sign * v
        if out[k] == 0:
            del out[k]
    return out


def _pmul(p, q):
    out = {}
    for (a, b), u in p.items():
        for (c, d), v in q.items():
            k = (a + c, b + d)
            out[k] = out.get(k, 0) + u * v
            if out[k] == 0:
                del out[k]
    return out


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        p = self.sum()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                raise self.error("missing '*' between factors")
            raise self.error(f"unexpected {tok[1]!r}")
        return p

    def sum(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            p = _padd(p, self.term(), sign)
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*":
            self.take()
            p = _pmul(p, self.unary())
        return p

    def unary(self):
        if self.peek()[1] in ("+", "-"):
            sign = 1 if self.take()[1] == "+" else -1
            p = self.unary()
            return {k: sign * v for k, v in p.items()}
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be a nonnegative integer", tok)
            out = {(0, 0): Fraction(1)}
            for _ in range(int(tok[1])):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            num = Fraction(int(value))
            if self.peek()[1] == "/":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "num":
                    raise self.error("'/' is only allowed inside a rational literal a/b", den_tok)
                den = int(den_tok[1])
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                num /= den
            return {(0, 0): num} if num else {}
        if kind == "name":
            return {(1, 0): Fraction(1)} if value == "x" else {(0, 1): Fraction(1)}
        if value == "(":
            p = self.sum()
            close = self.take()
            if close[1] != ")":
                raise self.error("expected ')'", close)
            return p
        if kind == "end":
            raise self.error("unexpected end of expression", tok)
        raise self.error(f"unexpected {value!r}", tok)


def parse_form(text: str) -> BinaryForm:
    """Parse an expression such as ``"(x - 2*y)^3"`` into an exact :class:`BinaryForm`."""
    poly = _Parser(text).parse()
    if not poly:
        raise ParseError("expression expands to the zero polynomial", text)
    degrees = {a + b for a, b in poly}
    if len(degrees) > 1:
        raise HomogeneityError(f"expression is not homogeneous: total degrees {sorted(degrees)}")
    n = degrees.pop()
    return BinaryForm(poly.get((n - i, i), 0) for i in range(n + 1))


def _monomial(dx, dy):
    parts = []
    for var, d in (("x", dx), ("y", dy)):
        if d == 1:
            parts.append(var)
        elif d > 1:
            parts.append(f"{var}^{d}")
    return "*".join(parts)


def format_form(f: BinaryForm) -> str:
    """Canonical text: descending powers of x, rationals written ``a/b``."""
    n = f.degree
    pieces = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mono = _monomial(n - i, i)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) if pieces else "0"
