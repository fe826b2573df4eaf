"""Reader for ideal files.

::

    field 32003        # or: field rational
    ring x0 x1 x2
    gens
    x0*x1
    x0*x2
    x1*x2

Generator expressions follow

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | atom ['^' natural]
    atom   := integer | variable | '(' expr ')'

Division is only by nonzero constants; it exists so that printed rational
coefficients such as ``3/2*x0`` read back.
"""

from __future__ import annotations

from dataclasses import dataclass
import re

from .errors import NotEquigenerated, ParseError, UnknownVariable
from .groebner import Ideal
from .poly import MAX_EXPONENT, CoefficientField, PolynomialRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = re.compile(r"y\d+$")


def _tokenize(text, line):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, other = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("int", int(num), col))
        elif name is not None:
            tokens.append(("name", name, col))
        elif other in "+-*/^()":
            tokens.append((other, other, col))
        else:
            raise ParseError(f"unexpected character {other!r}", line, col)
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _ExprParser:
    def __init__(self, text, ring, line):
        self.ring = ring
        self.line = line
        self.tokens = _tokenize(text, line)
        self.i = 0
        self.vars = {n: ring.gen(k) for k, n in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.tokens[self.i]
        raise ParseError(message, self.line, tok[2])

    def parse(self):
        if self.peek() == "end":
            self.error("empty expression")
        f = self.expr()
        if self.peek() != "end":
            self.error(f"unexpected {self.tokens[self.i][1]!r}")
        return f

    def expr(self):
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            g = self.factor()
            if op[0] == "*":
                if f and g and f.total_degree() + g.total_degree() > MAX_EXPONENT:
                    self.error(f"degree exceeds {MAX_EXPONENT}", op)
                f = f * g
            else:
                if g.total_degree() > 0:
                    self.error("division by a non-constant", op)
                if not g:
                    self.error("division by zero", op)
                f = f.scale(self.ring.field.inv(g.leading_coefficient))
        return f

    def factor(self):
        if self.peek() == "-":
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.error("exponent must be a natural number", tok)
            if base and base.total_degree() * tok[1] > MAX_EXPONENT:
                self.error(f"degree exceeds {MAX_EXPONENT}", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return self.ring.const(tok[1])
        if kind == "name":
            if tok[1] not in self.vars:
                raise UnknownVariable(f"unknown variable {tok[1]!r}", self.line, tok[2])
            return self.vars[tok[1]]
        if kind == "(":
            f = self.expr()
            if self.take()[0] != ")":
                self.error("expected ')'", self.tokens[self.i - 1])
            return f
        if kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok[1]!r}", tok)


def parse_polynomial(text, ring, line=1):
    return _ExprParser(text, ring, line).parse()


@dataclass
class IdealFile:
    field: CoefficientField
    names: tuple
    gen_texts: list
    ideal: Ideal
    degree: int

    @property
    def ring(self):
        return self.ideal.ring

    @property
    def gens(self):
        return list(self.ideal.gens)


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def parse_ideal_file(text):
    field = None
    names = None
    gens = []
    in_gens = False
    lines = text.splitlines()
    eof = (len(lines) + 1, 1)
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        col = raw.index(line[0]) + 1
        if in_gens:
            gens.append((lineno, line, col))
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "field":
            if field is not None:
                raise ParseError("duplicate field declaration", lineno, col)
            if rest == "rational":
                field = CoefficientField.rational()
            elif rest.isdigit():
                try:
                    field = CoefficientField.prime(int(rest))
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, col) from None
            else:
                raise ParseError("field must be a prime or 'rational'", lineno, col)
        elif word == "ring":
            if names is not None:
                raise ParseError("duplicate ring declaration", lineno, col)
            names = tuple(rest.split())
            if not names:
                raise ParseError("ring needs at least one variable", lineno, col)
            for n in names:
                if not _NAME.match(n):
                    raise ParseError(f"bad variable name {n!r}", lineno, col)
                if _RESERVED.match(n):
                    raise ParseError(f"variable name {n!r} is reserved for image coordinates", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", lineno, col)
        elif word == "gens" and not rest:
            if names is None:
                raise ParseError("'gens' before 'ring'", lineno, col)
            in_gens = True
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, col)
    if names is None:
        raise ParseError("missing 'ring' line", *eof)
    if not in_gens:
        raise ParseError("missing 'gens' section", *eof)
    if not gens:
        raise ParseError("no generators", *eof)
    field = field or CoefficientField.prime(32003)
    ring = PolynomialRing(field, names)
    polys = []
    degrees = []
    for lineno, line, col in gens:
        f = parse_polynomial(line, ring, lineno)
        if not f:
            raise NotEquigenerated(f"line {lineno}: generator is zero")
        if not f.is_homogeneous():
            raise NotEquigenerated(f"line {lineno}: {line!r} is not homogeneous")
        polys.append(f)
        degrees.append(f.homogeneous_degree())
    if len(set(degrees)) != 1:
        raise NotEquigenerated(f"generators have degrees {degrees}")
    return IdealFile(field, names, [g[1] for g in gens], Ideal(ring, polys), degrees[0])


def format_ideal_file(ideal):
    F = ideal.ring.field
    lines = [f"field {F.p if F.p else 'rational'}", "ring " + " ".join(ideal.ring.names), "gens"]
    lines += [str(g) for g in ideal.gens]
    return "\n".join(lines) + "\n"
