"""Recursive-descent parser for the input expression grammar.

    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := rational
              | 't' ('^' uint)?
              | 'exp(' [rational '*'?] 't' ')'
              | 'cos(' [rational '*'?] 't' ')'
              | 'sin(' [rational '*'?] 't' ')'
              | '(' expr ')'
    rational := int ('/' uint)?

Whitespace is insignificant.  cos and sin lower to conjugate pairs of
imaginary-rate atoms, so the result is always a plain ExpPoly.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Atom, ExpPoly
from .errors import ParseError
from .scalars import ExactScalar

_FUNCS = ("exp", "cos", "sin")


class _Tokens:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def startswith(self, word: str) -> bool:
        self.skip_ws()
        return self.src.startswith(word, self.pos)

    def expect(self, lit: str, expected=None):
        self.skip_ws()
        if not self.src.startswith(lit, self.pos):
            raise ParseError(f"expected {lit!r}", self.pos,
                             expected or {lit})
        self.pos += len(lit)

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected digits", start, {"integer"})
        return int(self.src[start:self.pos])


def _parse_rational(tk: _Tokens) -> Fraction:
    tk.skip_ws()
    neg = False
    if tk.peek() == "-":
        neg = True
        tk.pos += 1
    num = tk.take_uint()
    den = 1
    if tk.peek() == "/":
        tk.pos += 1
        den = tk.take_uint()
        if den == 0:
            raise ParseError("zero denominator", tk.pos, {"nonzero integer"})
    value = Fraction(num, den)
    return -value if neg else value


def _starts_rational(tk: _Tokens) -> bool:
    c = tk.peek()
    if c.isdigit():
        return True
    if c == "-":
        save = tk.pos
        tk.pos += 1
        nxt = tk.peek()
        tk.pos = save
        return nxt.isdigit()
    return False


def _parse_trig_arg(tk: _Tokens) -> Fraction:
    """The '[rational *?] t' body shared by exp/cos/sin."""
    rate = Fraction(1)
    if _starts_rational(tk):
        rate = _parse_rational(tk)
        if tk.peek() == "*":
            tk.pos += 1
    tk.expect("t", {"t"})
    tk.expect(")", {")"})
    return rate


def _parse_factor(tk: _Tokens) -> ExpPoly:
    tk.skip_ws()
    if tk.peek() == "(":
        tk.pos += 1
        inner = _parse_expr(tk)
        tk.expect(")", {")"})
        return inner
    for name in _FUNCS:
        if tk.startswith(name + "("):
            tk.pos += len(name) + 1
            rate = _parse_trig_arg(tk)
            if name == "exp":
                return ExpPoly.atom(0, ExactScalar(rate))
            i_rate = ExactScalar(0, rate)
            plus = Atom(0, i_rate)
            minus = Atom(0, -i_rate)
            if name == "cos":
                half = ExactScalar(Fraction(1, 2))
                return ExpPoly({plus: half, minus: half})
            half_i = ExactScalar(0, Fraction(1, 2))
            return ExpPoly({plus: -half_i, minus: half_i})
    if tk.peek() == "t":
        tk.pos += 1
        m = 1
        if tk.peek() == "^":
            tk.pos += 1
            m = tk.take_uint()
        return ExpPoly.atom(m, 0)
    if _starts_rational(tk):
        return ExpPoly.atom(0, 0, ExactScalar(_parse_rational(tk)))
    raise ParseError("expected a factor", tk.pos,
                     {"rational", "t", "exp(", "cos(", "sin(", "("})


def _parse_term(tk: _Tokens) -> ExpPoly:
    value = _parse_factor(tk)
    while tk.peek() == "*":
        tk.pos += 1
        value = value * _parse_factor(tk)
    return value


def _parse_expr(tk: _Tokens) -> ExpPoly:
    value = _parse_term(tk)
    while True:
        c = tk.peek()
        if c == "+":
            tk.pos += 1
            value = value + _parse_term(tk)
        elif c == "-":
            tk.pos += 1
            value = value - _parse_term(tk)
        else:
            return value


def parse_expr(src: str) -> ExpPoly:
    """Parse an expression into canonical ExpPoly form."""
    tk = _Tokens(src)
    value = _parse_expr(tk)
    tk.skip_ws()
    if tk.pos != len(src):
        raise ParseError("unexpected trailing input", tk.pos,
                         {"+", "-", "*", "end of input"})
    return value
