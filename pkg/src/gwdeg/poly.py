"""Dense univariate polynomials over a base field.

Coefficients are stored ascending and trimmed, so the zero polynomial has an
empty coefficient tuple and degree -1.  Degrees are capped at 64: the guard
turns runaway symbolic growth into a clean error instead of a stall.

Resultants run over the integers through a fraction-free subresultant
remainder sequence (Brown's formulation).  Rational inputs are cleared to
integer coefficients first and the scaling Res(c*f, g) = c^deg(g) * Res(f, g)
is divided back out; prime-field inputs are lifted to their residue
representatives, which commutes with reduction because the leading
coefficients stay nonzero.  Gcds over a prime field use the plain Euclidean
algorithm; over the rational kinds they reuse the integer subresultant
sequence to keep intermediate coefficients small.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import FieldMismatchError, MathDomainError
from .fields import FieldKind, FieldSpec, Scalar

MAX_DEGREE = 64


class Polynomial:
    """A dense polynomial with exact coefficients over one base field."""

    __slots__ = ("field", "coeffs", "var")

    def __init__(self, field: FieldSpec, coeffs, var: str = "x"):
        cs = []
        for c in coeffs:
            cs.append(c if isinstance(c, Scalar) else Scalar(field, c))
            if cs[-1].field != field:
                raise FieldMismatchError("coefficient from a different field")
        while cs and cs[-1].is_zero():
            cs.pop()
        if len(cs) - 1 > MAX_DEGREE:
            raise MathDomainError(f"degree above the guard of {MAX_DEGREE}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # ---- constructors ----

    @classmethod
    def zero(cls, field: FieldSpec, var: str = "x") -> "Polynomial":
        return cls(field, (), var)

    @classmethod
    def one(cls, field: FieldSpec, var: str = "x") -> "Polynomial":
        return cls(field, (1,), var)

    @classmethod
    def variable(cls, field: FieldSpec, var: str = "x") -> "Polynomial":
        return cls(field, (0, 1), var)

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, coeff=1, var: str = "x") -> "Polynomial":
        return cls(field, [0] * k + [coeff], var)

    # ---- structure ----

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise MathDomainError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def leading_coefficient(self) -> Scalar:
        if self.is_zero():
            raise MathDomainError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading_coefficient() == 1

    def coefficient(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero()

    # ---- arithmetic ----

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatchError("polynomials over different fields")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return Polynomial(self.field, (other,), self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            self.field,
            [self.coefficient(i) + o.coefficient(i) for i in range(n)],
            self.var,
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            self.field,
            [self.coefficient(i) - o.coefficient(i) for i in range(n)],
            self.var,
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return Polynomial.zero(self.field, self.var)
        out = [self.field.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out, self.var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = Polynomial.one(self.field, self.var)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def scale(self, c) -> "Polynomial":
        c = c if isinstance(c, Scalar) else Scalar(self.field, c)
        return Polynomial(self.field, [a * c for a in self.coeffs], self.var)

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise MathDomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Polynomial.zero(self.field, self.var), self
        quot = [self.field.zero()] * (dq + 1)
        inv_lc = o.leading_coefficient().inverse()
        for k in range(dq, -1, -1):
            c = rem[k + o.degree] * inv_lc
            quot[k] = c
            if not c.is_zero():
                for j, b in enumerate(o.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return (
            Polynomial(self.field, quot, self.var),
            Polynomial(self.field, rem[: o.degree], self.var) if o.degree > 0
            else Polynomial.zero(self.field, self.var),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_divide(self, other) -> "Polynomial":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise MathDomainError("division is not exact")
        return q

    # ---- evaluation and calculus ----

    def evaluate(self, x) -> Scalar:
        x = x if isinstance(x, Scalar) else Scalar(self.field, x)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.field,
            [i * c for i, c in enumerate(self.coeffs)][1:],
            self.var,
        )

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise MathDomainError("the zero polynomial cannot be made monic")
        return self.scale(self.leading_coefficient().inverse())

    def with_var(self, var: str) -> "Polynomial":
        return Polynomial(self.field, self.coeffs, var)

    # ---- equality and display ----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self._coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if c.is_zero():
                continue
            value = c.value
            negative = self.field.uses_fractions and value < 0
            mag = -value if negative else value
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = self.var if k == 1 else f"{self.var}^{k}"
            else:
                body = f"{mag}*{self.var}" if k == 1 else f"{mag}*{self.var}^{k}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self.field}, {self})"


# ---------------------------------------------------------------------------
# Integer subresultant remainder sequences
# ---------------------------------------------------------------------------


def _int_degree(f: list[int]) -> int:
    return len(f) - 1


def _int_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f

def _int_mul_ground(f: list[int], c: int) -> list[int]:
    return [a * c for a in f]


def _int_quo_ground(f: list[int], c: int) -> list[int]:
    out = []
    for a in f:
        q, r = divmod(a, c)
        if r:
            raise ArithmeticError("inexact ground division in subresultant chain")
        out.append(q)
    return out


def _int_sub(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] -= b
    return _int_trim(out)


def _int_prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of f by g: lc(g)^(df-dg+1) * f modulo g."""
    df, dg = _int_degree(f), _int_degree(g)
    if df < dg:
        return list(f)
    r, dr = list(f), df
    n = df - dg + 1
    lc_g = g[-1]
    while True:
        lc_r = r[-1]
        j = dr - dg
        n -= 1
        shifted = [0] * j + _int_mul_ground(g, lc_r)
        r = _int_sub(_int_mul_ground(r, lc_g), shifted)
        dr = _int_degree(r)
        if dr < dg:
            break
    return _int_mul_ground(r, lc_g**n)


def _int_subresultants(f: list[int], g: list[int]) -> tuple[list[list[int]], list[int]]:
    """Brown's subresultant PRS; needs deg f >= deg g and both nonzero.

    Returns the remainder sequence and the scalar subresultant chain; the
    final scalar is the resultant when the sequence bottoms out at degree 0.
    """
    n, m = _int_degree(f), _int_degree(g)
    d = n - m
    b = (-1) ** (d + 1)
    h = _int_mul_ground(_int_prem(f, g), b)
    lc = g[-1]
    c = lc**d
    R = [f, g]
    S = [1, c]
    c = -c
    while h:
        k = _int_degree(h)
        R.append(h)
        f, g, m, d = g, h, k, m - k
        b = -lc * c**d
        h = _int_quo_ground(_int_prem(f, g), b)
        lc = g[-1]
        if d > 1:
            q, r = divmod((-lc) ** d, c ** (d - 1))
            if r:
                raise ArithmeticError("inexact division in subresultant chain")
            c = q
        else:
            c = -lc
        S.append(-c)
    return R, S


def _to_int_coeffs(f: Polynomial) -> tuple[list[int], int]:
    """Integer coefficient list of f together with the clearing multiplier."""
    if f.field.uses_fractions:
        mult = 1
        for c in f.coeffs:
            den = c.value.denominator
            mult = mult * den // math.gcd(mult, den)
        return [int(c.value * mult) for c in f.coeffs], mult
    return [c.value for c in f.coeffs], 1


def _int_primitive(f: list[int]) -> list[int]:
    g = 0
    for a in f:
        g = math.gcd(g, a)
    if g <= 1:
        return list(f)
    return [a // g for a in f]


def _check_pair(f: Polynomial, g: Polynomial) -> None:
    if not isinstance(f, Polynomial) or not isinstance(g, Polynomial):
        raise MathDomainError("expected polynomials")
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd; Euclidean over a prime field, subresultant PRS otherwise."""
    _check_pair(f, g)
    if f.is_zero() and g.is_zero():
        raise MathDomainError("gcd of two zero polynomials")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.field.kind is FieldKind.PRIME_FIELD:
        a, b = f, g
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()
    fa, _ = _to_int_coeffs(f)
    ga, _ = _to_int_coeffs(g)
    fa, ga = _int_primitive(fa), _int_primitive(ga)
    if _int_degree(fa) < _int_degree(ga):
        fa, ga = ga, fa
    if _int_degree(ga) == 0:
        return Polynomial.one(f.field, f.var)
    R, _ = _int_subresultants(fa, ga)
    last = R[-1]
    if _int_degree(last) == 0:
        return Polynomial.one(f.field, f.var)
    return Polynomial(f.field, _int_primitive(last), f.var).monic()


def poly_gcdex(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(d, u, v) with d = u*f + v*g monic; plain extended Euclid."""
    _check_pair(f, g)
    if f.is_zero() and g.is_zero():
        raise MathDomainError("gcd of two zero polynomials")
    zero = Polynomial.zero(f.field, f.var)
    one = Polynomial.one(f.field, f.var)
    r0, r1 = f, g
    u0, u1 = one, zero
    v0, v1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lc = r0.leading_coefficient().inverse()
    return r0.scale(lc), u0.scale(lc), v0.scale(lc)


def resultant(f: Polynomial, g: Polynomial) -> Scalar:
    """Res(f, g) by the fraction-free subresultant remainder sequence."""
    _check_pair(f, g)
    if f.is_zero() and g.is_zero():
        raise MathDomainError("resultant of two zero polynomials")
    if f.is_zero() or g.is_zero():
        return f.field.zero()
    n, m = f.degree, g.degree
    sign = 1
    if n < m:
        f, g = g, f
        n, m = m, n
        if n % 2 and m % 2:
            sign = -1
    if n == 0:
        # two nonzero constants
        return f.field.one()
    fa, cf = _to_int_coeffs(f)
    ga, cg = _to_int_coeffs(g)
    if m == 0:
        res = ga[0] ** n
    else:
        R, S = _int_subresultants(fa, ga)
        res = S[-1] if _int_degree(R[-1]) == 0 else 0
    if f.field.kind is FieldKind.PRIME_FIELD:
        return Scalar(f.field, sign * res)
    return Scalar(f.field, Fraction(sign * res, cf**m * cg**n))


def root_multiplicity(f: Polynomial, r) -> int:
    """Multiplicity of r as a root of f, zero when r is not a root."""
    if f.is_zero():
        raise MathDomainError("the zero polynomial has no root multiplicities")
    r = r if isinstance(r, Scalar) else Scalar(f.field, r)
    m = 0
    current = f
    while not current.is_constant():
        q, rem = deflate(current, r)
        if not rem.is_zero():
            return m
        m += 1
        current = q
    if not current.constant_value().is_zero():
        return m
    return m


def deflate(f: Polynomial, r: Scalar) -> tuple[Polynomial, Scalar]:
    """Synthetic division of f by (x - r): quotient and remainder scalar."""
    if f.is_zero():
        return f, f.field.zero()
    n = f.degree
    if n == 0:
        return Polynomial.zero(f.field, f.var), f.coeffs[0]
    out = [f.field.zero()] * n
    acc = f.coefficient(n)
    for k in range(n - 1, -1, -1):
        out[k] = acc
        acc = acc * r + f.coefficient(k)
    return Polynomial(f.field, out, f.var), acc
