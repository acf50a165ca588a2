"""Square classes, Legendre symbols, and Hilbert symbols.

Hilbert symbols follow the classical closed formulas: at an odd prime the
symbol is read off from valuations and Legendre symbols of the unit parts, at
2 from the unit classes modulo 8, and at the real place from signs.  The
archimedean place is denoted by the string "inf" throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MathDomainError
from .fields import FieldKind, FieldSpec, Scalar
from .primes import factorize, is_probable_prime, squarefree_part

INF_PLACE = "inf"


@dataclass(frozen=True)
class SquareClass:
    """A square class a*(k^x)^2, stored as a canonical representative.

    Over the rationals the representative is sign * squarefree with sqfree a
    positive squarefree integer.  Over a prime field sign is always +1 and
    sqfree is 1 for squares or the least positive nonsquare residue.  Over
    the formal-real field sqfree is 1 and only the sign survives; over the
    formal-complex field every nonzero class is (1, 1).
    """

    field: FieldSpec
    sign: int
    sqfree: int

    @property
    def signed(self) -> int:
        return self.sign * self.sqfree

    def is_trivial(self) -> bool:
        return self.sign == 1 and self.sqfree == 1

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if self.field != other.field:
            raise MathDomainError("square classes over different fields")
        if self.field.kind is FieldKind.PRIME_FIELD:
            residue = self.sqfree * other.sqfree % self.field.p
            return reduce_square_class(Scalar(self.field, residue))
        return reduce_square_class(
            Scalar(self.field, Fraction(self.signed * other.signed))
        )

    def __str__(self):
        if self.sign < 0:
            return f"-{self.sqfree}"
        return str(self.sqfree)


def legendre_symbol(a: int, p: int) -> int:
    """(a/p) in {-1, 0, 1} by Euler's criterion; p must be an odd prime."""
    if p < 3 or p % 2 == 0:
        raise MathDomainError("Legendre symbol needs an odd prime modulus")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def least_nonsquare(p: int) -> int:
    n = 2
    while legendre_symbol(n, p) != -1:
        n += 1
    return n


def _as_nonzero_fraction(a) -> Fraction:
    if isinstance(a, Scalar):
        a = a.value
    a = Fraction(a)
    if a == 0:
        raise MathDomainError("expected a nonzero value")
    return a


def reduce_square_class(a: Scalar) -> SquareClass:
    """Canonical representative of the square class of a nonzero scalar."""
    if not isinstance(a, Scalar):
        raise MathDomainError("reduce_square_class expects a Scalar")
    if a.is_zero():
        raise MathDomainError("zero has no square class")
    kind = a.field.kind
    if kind is FieldKind.PRIME_FIELD:
        if legendre_symbol(a.value, a.field.p) == 1:
            return SquareClass(a.field, 1, 1)
        return SquareClass(a.field, 1, least_nonsquare(a.field.p))
    if kind is FieldKind.FORMAL_COMPLEX:
        return SquareClass(a.field, 1, 1)
    if kind is FieldKind.FORMAL_REAL:
        return SquareClass(a.field, a.sign(), 1)
    # rationals: n/d and n*d share a square class
    frac = a.value
    rep = squarefree_part(frac.numerator * frac.denominator)
    return SquareClass(a.field, -1 if rep < 0 else 1, abs(rep))


def is_square(a: Scalar) -> bool:
    """Exact squareness of a nonzero scalar in its own field."""
    if a.is_zero():
        raise MathDomainError("squareness of zero is not defined here")
    kind = a.field.kind
    if kind is FieldKind.PRIME_FIELD:
        return legendre_symbol(a.value, a.field.p) == 1
    if kind is FieldKind.FORMAL_COMPLEX:
        return True
    if kind is FieldKind.FORMAL_REAL:
        return a.value > 0
    return reduce_square_class(a).is_trivial()


# ---------------------------------------------------------------------------
# Hilbert symbols over the rationals
# ---------------------------------------------------------------------------


def _val_unit(a: Fraction, p: int) -> tuple[int, Fraction]:
    """p-adic valuation and unit part of a nonzero rational."""
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def _unit_residue(u: Fraction, m: int) -> int:
    """Residue of a rational that is a unit modulo m."""
    return u.numerator * pow(u.denominator, -1, m) % m


def _validate_place(v) -> None:
    if v == INF_PLACE:
        return
    if isinstance(v, int) and v >= 2 and is_probable_prime(v):
        return
    raise MathDomainError(f"{v!r} is not a place of the rationals")


def hilbert_symbol(a, b, v) -> int:
    """The Hilbert symbol (a, b)_v for nonzero rationals at a place v.

    v is either a prime number or the string "inf" for the real place.
    """
    a = _as_nonzero_fraction(a)
    b = _as_nonzero_fraction(b)
    _validate_place(v)
    if v == INF_PLACE:
        return -1 if (a < 0 and b < 0) else 1
    p = v
    alpha, u = _val_unit(a, p)
    beta, w = _val_unit(b, p)
    if p != 2:
        exp = alpha * beta * ((p - 1) // 2)
        result = (-1) ** (exp % 2)
        if beta % 2:
            result *= legendre_symbol(_unit_residue(u, p), p)
        if alpha % 2:
            result *= legendre_symbol(_unit_residue(w, p), p)
        return result
    u8 = _unit_residue(u, 8)
    w8 = _unit_residue(w, 8)
    eps_u = (u8 % 4 - 1) // 2
    eps_w = (w8 % 4 - 1) // 2
    omega_u = (u8 * u8 - 1) // 8 % 2
    omega_w = (w8 * w8 - 1) // 8 % 2
    exp = eps_u * eps_w + alpha * omega_w + beta * omega_u
    return (-1) ** (exp % 2)


def rational_places(*values) -> list:
    """The places {inf, 2} plus odd primes dividing any of the given values.

    Values may be nonzero ints, Fractions, or rational-kind Scalars; the odd
    primes are collected from numerators and denominators alike.
    """
    odd: set[int] = set()
    for x in values:
        frac = _as_nonzero_fraction(x)
        for n in (frac.numerator, frac.denominator):
            for p, _ in factorize(abs(n)):
                if p > 2:
                    odd.add(p)
    return [INF_PLACE, 2] + sorted(odd)
