"""Text front end for polynomials, ideals and pairs.

Polynomials use ``+ - * ^`` and parentheses with explicit ``*``; integer
coefficients are reduced mod p.  A pair is ``factor (';' factor)*`` with
``factor := ideal '^' (rational | 't')`` and ``ideal := '(' poly (',' poly)* ')' | poly``.
The exponent is whatever follows the last top-level ``^`` of the factor.
"""

import re
from fractions import Fraction

from .groebner import Ideal
from .pairs import MixedPair
from .poly import Polynomial


class ParseError(ValueError):
    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        where = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(f"{message}{where}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))", re.DOTALL)


def _tokenize(text, offset=0):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or (m.group(0).strip() == "" and m.end() >= len(text)):
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start + offset))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start + offset))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^(),":
                raise ParseError(f"unexpected character {ch!r}", start + offset)
            tokens.append(("op", ch, start + offset))
        pos = m.end()
    tokens.append(("end", None, len(text) + offset))
    return tokens


class _PolyParser:
    def __init__(self, text, ring, offset=0):
        self.ring = ring
        self.tokens = _tokenize(text, offset)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}", pos)

    def parse(self):
        f = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            if kind in ("int", "name") or v == "(":
                raise ParseError("missing '*' (juxtaposition is not allowed)", pos)
            raise ParseError(f"unexpected {v!r}", pos)
        return f

    def expr(self):
        f = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        sign = 1
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        f = self.power()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            f = f * self.power()
        return f if sign == 1 else -f

    def power(self):
        f = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError("polynomial exponents must be nonnegative integers", pos)
            f = f**v
        return f

    def atom(self):
        kind, v, pos = self.take()
        if kind == "int":
            return self.ring.constant(v)
        if kind == "name":
            if v not in self.ring.variables:
                raise ParseError(f"unknown variable {v!r}", pos)
            return self.ring.var(v)
        if v == "(":
            f = self.expr()
            self.expect(")")
            return f
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {v!r}", pos)


def parse_polynomial(text, ring, offset=0):
    return _PolyParser(text, ring, offset).parse()


def _split_top(text, sep, offset):
    """Split on ``sep`` outside parentheses; returns (piece, piece_offset) pairs."""
    depth = 0
    pieces = []
    start = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", offset + i)
        elif ch == sep and depth == 0:
            pieces.append((text[start:i], offset + start))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", offset + len(text))
    pieces.append((text[start:], offset + start))
    return pieces


def _matching_paren(text, i):
    depth = 0
    for j in range(i, len(text)):
        if text[j] == "(":
            depth += 1
        elif text[j] == ")":
            depth -= 1
            if depth == 0:
                return j
    return -1


def parse_ideal(text, ring, offset=0):
    stripped = text.strip()
    lead = offset + len(text) - len(text.lstrip())
    if not stripped:
        raise ParseError("empty ideal", offset)
    if stripped.startswith("(") and _matching_paren(stripped, 0) == len(stripped) - 1:
        pieces = _split_top(stripped[1:-1], ",", lead + 1)
    else:
        pieces = [(text, offset)]
    gens = []
    for piece, pos in pieces:
        if not piece.strip():
            raise ParseError("empty generator", pos)
        g = parse_polynomial(piece, ring, pos)
        if not g:
            raise ParseError("zero polynomial is not allowed as a generator", pos)
        gens.append(g)
    return Ideal(ring, gens)


_RATIONAL = re.compile(r"^\s*\(?\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*\)?\s*$")
_MOVING = re.compile(r"^\s*@?t\s*$")


def parse_exponent(text, offset=0):
    """``'t'``/``'@t'`` gives the string ``'t'``; otherwise a nonnegative Fraction."""
    if _MOVING.match(text):
        return "t"
    m = _RATIONAL.match(text)
    if not m:
        raise ParseError(f"bad exponent {text.strip()!r}", offset)
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError("zero denominator in exponent", offset)
    value = Fraction(num, den)
    if value < 0:
        raise ParseError("negative exponent", offset)
    return value


def _last_top_caret(text):
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        ch = text[i]
        if ch == ")":
            depth += 1
        elif ch == "(":
            depth -= 1
        elif ch == "^" and depth == 0:
            return i
    return -1


def parse_pair(text, ring):
    """Parse a pair; returns a MixedPair, or a ParametricPair if one factor has exponent t."""
    from .jumping import ParametricPair

    fixed = []
    moving = None
    for piece, pos in _split_top(text, ";", 0):
        if not piece.strip():
            raise ParseError("empty factor", pos)
        k = _last_top_caret(piece)
        if k < 0:
            raise ParseError("factor needs an exponent: '<ideal>^<rational>' or '<ideal>^t'", pos)
        exponent = parse_exponent(piece[k + 1:], pos + k + 1)
        ideal = parse_ideal(piece[:k], ring, pos)
        if exponent == "t":
            if moving is not None:
                raise ParseError("only one factor may carry the exponent t", pos + k + 1)
            moving = ideal
        else:
            fixed.append((ideal, exponent))
    base = MixedPair(ring, fixed)
    if moving is not None:
        return ParametricPair(base, moving)
    return base


def parse_rational(text):
    value = parse_exponent(text)
    if value == "t":
        raise ParseError(f"expected a rational, got {text!r}")
    return value


def parse_range(text):
    """``'lo..hi'`` as a pair of Fractions."""
    if ".." not in text:
        raise ParseError(f"range must look like lo..hi, got {text!r}")
    lo, hi = text.split("..", 1)
    return parse_rational(lo), parse_rational(hi)


__all__ = ["ParseError", "parse_polynomial", "parse_ideal", "parse_pair", "parse_exponent",
           "parse_rational", "parse_range", "Polynomial"]
