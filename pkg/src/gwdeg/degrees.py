"""Unstable degrees of pointed rational functions on the projective line.

A pointed function is f/g with f monic, deg f > deg g, and gcd(f, g) = 1, so
infinity maps to infinity.  The global degree is carried by the Bezoutian
form: the symmetric matrix of coefficients of

    (f(X) g(Y) - f(Y) g(X)) / (X - Y)

with the exact determinant as scalar.  Under complex semantics the form
carries no information beyond its rank, so the global degree is returned as
the identity matrix paired with the signed resultant
(-1)^(n(n-1)/2) * Res(f, g), which equals the Bezoutian determinant.

The local degree at a rational root r of multiplicity m is the m x m
antidiagonal filled with a single coefficient a = ((x - r)^m * g / f)(r),
the leading coefficient of the expansion of g/f at r.  Local degrees add up
to the global degree after twisting by squared root differences; the check
demands that f split over the base field.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MathDomainError
from .fields import FieldKind, FieldSpec, Scalar
from .gw import make_gw_class
from .linalg import det_bareiss, freeze
from .poly import Polynomial, deflate, poly_gcd, resultant, root_multiplicity
from .unstable import UnstableGWClass, add_gwu_divisorial, make_gwu


@dataclass(frozen=True)
class PointedRationalFunction:
    """f/g with f monic, deg f > deg g >= 0, and f, g coprime."""

    numerator: Polynomial
    denominator: Polynomial

    @property
    def field(self) -> FieldSpec:
        return self.numerator.field

    @property
    def degree(self) -> int:
        return self.numerator.degree

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


def make_pointed(f: Polynomial, g: Polynomial) -> PointedRationalFunction:
    """Validate the pointedness conditions without altering the input."""
    if f.field != g.field:
        raise MathDomainError("numerator and denominator over different fields")
    if g.is_zero():
        raise MathDomainError("denominator must be nonzero")
    if f.is_zero() or not f.is_monic():
        raise MathDomainError("numerator must be monic")
    if poly_gcd(f, g).degree != 0:
        raise MathDomainError("numerator and denominator share a factor")
    if f.degree <= g.degree:
        raise MathDomainError("numerator degree must exceed denominator degree")
    return PointedRationalFunction(f, g)


def make_pointed_from_fraction(f: Polynomial, g: Polynomial) -> PointedRationalFunction:
    """Reduce the fraction by its monic gcd, then validate."""
    if f.field != g.field:
        raise MathDomainError("numerator and denominator over different fields")
    if g.is_zero():
        raise MathDomainError("denominator must be nonzero")
    if f.is_zero():
        raise MathDomainError("numerator must be nonzero")
    d = poly_gcd(f, g)
    if d.degree > 0:
        f = f.exact_divide(d)
        g = g.exact_divide(d)
    return make_pointed(f, g)


def bezoutian_matrix(q: PointedRationalFunction):
    """Coefficient matrix of (f(X)g(Y) - f(Y)g(X)) / (X - Y).

    The bivariate numerator is divided synthetically by X - Y, treating it as
    a polynomial in X whose coefficients are polynomials in Y; the remainder
    of that division is zero by symmetry, which is asserted.
    """
    f, g = q.numerator, q.denominator
    field = q.field
    n = q.degree
    zero_poly = Polynomial.zero(field)
    # c_i(Y) = f_i * g(Y) - g_i * f(Y)
    cs = []
    for i in range(n + 1):
        cs.append(g.scale(f.coefficient(i)) - f.scale(g.coefficient(i)))
    # synthetic division by (X - Y): quotient coefficients in X, from the top
    quotients = [zero_poly] * n
    carry = cs[n]
    for i in range(n - 1, -1, -1):
        quotients[i] = carry
        shifted = Polynomial(field, (0,) + carry.coeffs)
        carry = cs[i] + shifted
    if not carry.is_zero():
        raise MathDomainError("Bezoutian division left a remainder")
    rows = [
        [quotients[i].coefficient(j) for j in range(n)] for i in range(n)
    ]
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise MathDomainError("Bezoutian matrix failed symmetry")
    return freeze(rows)


def global_unstable_degree(q: PointedRationalFunction) -> UnstableGWClass:
    """The Bezoutian form with its exact determinant as the scalar.

    Under complex semantics: the identity of the same rank, paired with the
    signed resultant.
    """
    n = q.degree
    field = q.field
    if field.kind is FieldKind.FORMAL_COMPLEX:
        sign = (-1) ** (n * (n - 1) // 2)
        scalar = Scalar(field, sign) * resultant(q.numerator, q.denominator)
        rows = [
            [field.one() if i == j else field.zero() for j in range(n)]
            for i in range(n)
        ]
        return make_gwu(make_gw_class(rows, field=field), scalar)
    bez = bezoutian_matrix(q)
    det = det_bareiss(bez)
    return make_gwu(make_gw_class(bez, field=field), det)


def local_newton_coefficient(q: PointedRationalFunction, r) -> tuple[int, Scalar]:
    """Multiplicity m of r in f and the coefficient ((x-r)^m * g / f)(r)."""
    r = r if isinstance(r, Scalar) else Scalar(q.field, r)
    m = root_multiplicity(q.numerator, r)
    if m == 0:
        raise MathDomainError(f"{r} is not a root of the numerator")
    cofactor = q.numerator
    for _ in range(m):
        cofactor, rem = deflate(cofactor, r)
        if not rem.is_zero():
            raise MathDomainError("multiplicity bookkeeping failed")
    denom = cofactor.evaluate(r)
    if denom.is_zero():
        raise MathDomainError("numerator cofactor vanished unexpectedly")
    return m, q.denominator.evaluate(r) / denom


def local_unstable_degree(q: PointedRationalFunction, r) -> UnstableGWClass:
    """The m x m antidiagonal local form at a rational root r."""
    m, a = local_newton_coefficient(q, r)
    field = q.field
    rows = [
        [a if i + j == m - 1 else field.zero() for j in range(m)]
        for i in range(m)
    ]
    gw = make_gw_class(rows, field=field)
    det = det_bareiss(rows)
    expected = Scalar(field, (-1) ** (m * (m - 1) // 2)) * a**m
    if det != expected:
        raise MathDomainError("local determinant failed its closed form")
    return make_gwu(gw, det)


def check_poincare_hopf(q: PointedRationalFunction, roots) -> bool:
    """Compare the divisorial sum of local degrees with the global degree.

    The roots must enumerate all zeroes of the numerator over the base
    field; if their multiplicities do not exhaust deg f, the statement does
    not apply and an error says so.
    """
    field = q.field
    pts = [r if isinstance(r, Scalar) else Scalar(field, r) for r in roots]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise MathDomainError("roots must be pairwise distinct")
    locals_ = [local_unstable_degree(q, r) for r in pts]
    if sum(c.rank for c in locals_) != q.degree:
        raise MathDomainError(
            "non-rational zeroes present; theorem hypothesis unmet"
        )
    total = add_gwu_divisorial(locals_, pts)
    glob = global_unstable_degree(q)
    from .unstable import is_isomorphic_gwu

    return is_isomorphic_gwu(total, glob)
