"""Text grammars for the command-line front end.

Polynomial literals: integer literals, variable tokens ``X<k>``, ``T``,
``H``, operators ``+ - * ^`` and parentheses; whitespace-insensitive.
``^`` binds tightest, then ``*``, then ``+``/``-``; a leading sign on a
term negates the whole product.  The canonical printer (IntPolynomial.__str__)
emits graded-lex order with explicit ``*`` and ``^`` and round-trips
through this parser.

Also parses the small literals used by the CLI: ring contexts ``P(m)`` /
``Fbar(d,n)``, flag shapes ``F(d1,...,ds;n)``, splitting types
``(a1,...,ar)`` and grouping lists ``(u1,r1),(u2,r2),...``.
"""

from __future__ import annotations

from .chowring import ChowContext, IncidenceFlag, ProjSpace
from .flags import FlagShape, SplittingType
from .polyring import H, IntPolynomial, T, Var, X, poly


class ParseError(ValueError):
    """Syntax error with a line/column position."""

    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        column = pos - text.rfind("\n", 0, pos)
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, min(self.pos, max(len(self.text) - 1, 0)))

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, literal: str) -> bool:
        if self.peek() == literal:
            self.pos += 1
            return True
        return False

    def expect(self, literal: str):
        if not self.eat(literal):
            got = self.peek() or "end of input"
            self.error(f"expected {literal!r}, found {got!r}")

    def integer(self, signed: bool = True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start:self.pos]

    def end(self):
        self.skip_ws()
        if self.pos < len(self.text):
            self.error(f"unexpected {self.text[self.pos]!r}")


def _variable(s: _Scanner) -> Var:
    start = s.pos
    name = s.word()
    if name == "T":
        return T
    if name == "H":
        return H
    if name.startswith("X") and name[1:].isdigit() and name[1:]:
        index = int(name[1:])
        if index < 1:
            s.pos = start
            s.error("X-indices start at 1")
        return X(index)
    s.pos = start
    s.error(f"unknown variable {name!r} (expected X<k>, T or H)")


def _atom(s: _Scanner) -> IntPolynomial:
    ch = s.peek()
    if ch == "(":
        s.eat("(")
        inner = _expr(s)
        s.expect(")")
        return inner
    if ch.isdigit():
        return poly(s.integer(signed=False))
    if ch.isalpha():
        return poly(_variable(s))
    s.error(f"expected a number, variable or '(', found {ch or 'end of input'!r}")


def _factor(s: _Scanner) -> IntPolynomial:
    base = _atom(s)
    while s.eat("^"):
        exponent = s.integer(signed=False)
        base = base ** exponent
    return base


def _term(s: _Scanner) -> IntPolynomial:
    sign = 1
    while True:
        if s.eat("-"):
            sign = -sign
        elif s.eat("+"):
            pass
        else:
            break
    out = _factor(s)
    while s.eat("*"):
        out = out * _factor(s)
    return sign * out


def _expr(s: _Scanner) -> IntPolynomial:
    out = _term(s)
    while True:
        ch = s.peek()
        if ch == "+":
            s.eat("+")
            out = out + _term(s)
        elif ch == "-":
            s.eat("-")
            out = out - _term(s)
        else:
            return out


def parse_polynomial(text: str) -> IntPolynomial:
    s = _Scanner(text)
    out = _expr(s)
    s.end()
    return out


def parse_context(text: str) -> ChowContext:
    s = _Scanner(text)
    name = s.word()
    if name == "P":
        s.expect("(")
        m = s.integer()
        s.expect(")")
        s.end()
        return ProjSpace(m)
    if name == "Fbar":
        s.expect("(")
        d = s.integer()
        s.expect(",")
        n = s.integer()
        s.expect(")")
        s.end()
        return IncidenceFlag(d, n)
    s.error(f"unknown ring {name!r} (expected P(m) or Fbar(d,n))")


def parse_shape(text: str) -> FlagShape:
    s = _Scanner(text)
    if s.word() != "F":
        s.error("expected a flag shape F(d1,...;n)")
    s.expect("(")
    dims = [s.integer()]
    while s.eat(","):
        dims.append(s.integer())
    s.expect(";")
    n = s.integer()
    s.expect(")")
    s.end()
    return FlagShape(n, tuple(dims))


def parse_splitting_type(text: str) -> SplittingType:
    s = _Scanner(text)
    s.expect("(")
    entries = [s.integer()]
    while s.eat(","):
        entries.append(s.integer())
    s.expect(")")
    s.end()
    return SplittingType(tuple(entries))


def parse_type_list(text: str) -> list[SplittingType]:
    """Semicolon-separated splitting types: "(1,0);(2,2);...". """
    return [parse_splitting_type(part) for part in text.split(";")]


def parse_grouping(text: str) -> list[tuple[int, int]]:
    """Comma-separated pairs "(u1,r1),(u2,r2),..."."""
    s = _Scanner(text)
    out = []
    while True:
        s.expect("(")
        u = s.integer()
        s.expect(",")
        r = s.integer()
        s.expect(")")
        out.append((u, r))
        if not s.eat(","):
            break
    s.end()
    return out


def parse_root_list(text: str) -> list[IntPolynomial]:
    """Comma-separated linear forms (commas never occur inside the grammar)."""
    return [parse_polynomial(part) for part in text.split(",")]


def parse_variable_list(text: str) -> list[Var]:
    out = []
    for part in text.split(","):
        s = _Scanner(part)
        out.append(_variable(s))
        s.end()
    return out
