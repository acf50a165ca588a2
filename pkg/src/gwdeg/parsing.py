"""Text input: field descriptors, polynomial expressions, algebras, elements.

Polynomial syntax is the usual infix notation with +, -, *, /, ^ and
parentheses.  Literals are integers; rationals are written as divisions
(3/4).  Division is only defined by a nonzero constant.  The first
identifier encountered becomes the variable; any other identifier is
rejected.  There is no implicit multiplication: write 2*x, not 2x.
"""
from __future__ import annotations

from .errors import InputSyntaxError, MathDomainError
from .etale import AlgebraElement, EtaleAlgebra, make_etale_algebra
from .fields import CC, GF, QQ, RR, FieldSpec, Scalar
from .poly import Polynomial

MAX_EXPONENT = 10_000

_END = "end"
_INT = "int"
_NAME = "name"
_PUNCT = "+-*/^()"


def _tokenize(text: str):
    tokens = []
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
            tokens.append((_INT, text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append((_NAME, text[i:j], i))
            i = j
            continue
        if c in _PUNCT:
            tokens.append((c, c, i))
            i += 1
            continue
        raise InputSyntaxError(f"unexpected character {c!r}", position=i)
    tokens.append((_END, "", n))
    return tokens


class _PolyParser:
    """Recursive descent over the token list above."""

    def __init__(self, text: str, field: FieldSpec, variable=None):
        self.field = field
        self.variable = variable
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def advance(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def parse(self) -> Polynomial:
        node = self.expr()
        kind, text, pos = self.peek()
        if kind != _END:
            raise InputSyntaxError(f"unexpected {text!r}", position=pos)
        return node.with_var(self.variable or "x")

    def expr(self) -> Polynomial:
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.advance()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Polynomial:
        node = self.unary()
        while self.peek()[0] in "*/":
            kind, _, pos = self.advance()
            rhs = self.unary()
            if kind == "*":
                node = node * rhs
                continue
            if not rhs.is_constant():
                raise InputSyntaxError("division by non-literal", position=pos)
            value = rhs.constant_value()
            if value.is_zero():
                raise InputSyntaxError("division by zero", position=pos)
            node = node.scale(value.inverse())
        return node

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.advance()
            return -self.unary()
        if kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        node = self.atom()
        if self.peek()[0] != "^":
            return node
        self.advance()
        kind, text, pos = self.advance()
        if kind != _INT:
            raise InputSyntaxError("exponent must be an integer", position=pos)
        exponent = int(text)
        if exponent > MAX_EXPONENT:
            raise InputSyntaxError("exponent too large", position=pos)
        return node ** exponent

    def atom(self) -> Polynomial:
        kind, text, pos = self.advance()
        if kind == _INT:
            return Polynomial(self.field, (int(text),))
        if kind == _NAME:
            if self.variable is None:
                self.variable = text
            elif text != self.variable:
                raise InputSyntaxError(f"unknown symbol {text!r}", position=pos)
            return Polynomial.variable(self.field)
        if kind == "(":
            node = self.expr()
            closing, _, cpos = self.advance()
            if closing != ")":
                raise InputSyntaxError("expected ')'", position=cpos)
            return node
        if kind == _END:
            raise InputSyntaxError("unexpected end of input", position=pos)
        raise InputSyntaxError(f"unexpected {text!r}", position=pos)


def parse_polynomial(text: str, field: FieldSpec, variable=None) -> Polynomial:
    """Parse an infix polynomial expression over the given field.

    When `variable` is given, identifiers must match it; otherwise the
    first identifier seen binds the variable name.
    """
    return _PolyParser(text, field, variable).parse()


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    poly = parse_polynomial(text, field)
    if not poly.is_constant():
        raise InputSyntaxError("expected a constant value")
    return poly.constant_value()


def parse_field_descriptor(text: str) -> FieldSpec:
    """QQ, RR, CC, or GF:p with p an odd prime."""
    name = text.strip()
    if name == "QQ":
        return QQ
    if name == "RR":
        return RR
    if name == "CC":
        return CC
    if name.startswith("GF:"):
        digits = name[3:]
        if not digits.isdigit():
            raise InputSyntaxError(f"bad prime field modulus {digits!r}")
        try:
            return GF(int(digits))
        except MathDomainError as exc:
            raise InputSyntaxError(str(exc)) from exc
    raise InputSyntaxError(f"unknown field descriptor {text!r}")


def parse_algebra_descriptor(text: str) -> EtaleAlgebra:
    """BASE[var]/(f1)x(f2)x...x(fs) with each factor in parentheses."""
    s = text.strip()
    i = s.find("[")
    if i < 0:
        raise InputSyntaxError("expected BASE[var]/(factor)... in algebra descriptor")
    base = parse_field_descriptor(s[:i])
    j = s.find("]", i)
    if j < 0:
        raise InputSyntaxError("unclosed '[' in algebra descriptor", position=i)
    var = s[i + 1:j].strip()
    if not var.isidentifier():
        raise InputSyntaxError(f"bad variable name {var!r}", position=i + 1)
    k = j + 1
    while k < len(s) and s[k].isspace():
        k += 1
    if k >= len(s) or s[k] != "/":
        raise InputSyntaxError("expected '/' after the variable", position=k)
    k += 1
    factors = []
    while True:
        while k < len(s) and s[k].isspace():
            k += 1
        if k >= len(s) or s[k] != "(":
            raise InputSyntaxError("expected '(' opening a factor", position=k)
        depth = 1
        start = k + 1
        k += 1
        while k < len(s) and depth:
            if s[k] == "(":
                depth += 1
            elif s[k] == ")":
                depth -= 1
            k += 1
        if depth:
            raise InputSyntaxError("unclosed '(' in factor", position=start - 1)
        factors.append(parse_polynomial(s[start:k - 1], base, variable=var))
        while k < len(s) and s[k].isspace():
            k += 1
        if k >= len(s):
            break
        if s[k] != "x":
            raise InputSyntaxError("expected factor separator 'x'", position=k)
        k += 1
    return make_etale_algebra(base, factors)


def parse_element(text: str, algebra: EtaleAlgebra) -> AlgebraElement:
    """One expression for a diagonal element, or ';'-separated residues."""
    var = algebra.factors[0].var
    parts = text.split(";")
    if len(parts) == 1:
        return algebra.coerce(parse_polynomial(text, algebra.base, variable=var))
    if len(parts) != len(algebra.factors):
        raise InputSyntaxError(
            f"expected 1 or {len(algebra.factors)} ';'-separated residues,"
            f" got {len(parts)}"
        )
    residues = [
        parse_polynomial(part, algebra.base, variable=var) for part in parts
    ]
    return algebra.element(residues)
