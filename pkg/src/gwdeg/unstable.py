"""Unstable classes: a form together with a chosen determinant scalar.

An unstable class is a pair (beta, d) whose scalar d must agree with the
Gram determinant up to squares.  That compatibility is decided exactly when
the algebra is a base field or splits into linear factors; otherwise the pair
is accepted and marked unchecked.  Isomorphism is strict on the scalar: the
form parts must be isomorphic and the scalars exactly equal, so (<1>, 1) and
(<4>, 4) are genuinely different unstable classes.
"""
from __future__ import annotations

from .errors import FieldMismatchError, MathDomainError
from .etale import AlgebraElement, EtaleAlgebra, as_algebra, is_unit
from .fields import FieldSpec, Scalar
from .gw import (
    GrothendieckWittClass,
    add_gw,
    gram_determinant,
    make_gw_class,
)
from .classify import get_witt_decomposition, is_isomorphic_gw
from .numbertheory import is_square

CHECKED = "checked"
UNCHECKED = "unchecked"


class UnstableGWClass:
    """A Grothendieck-Witt class with a distinguished determinant scalar."""

    __slots__ = ("gw", "scalar", "compatibility")

    def __init__(self, gw: GrothendieckWittClass, scalar: AlgebraElement):
        scalar = gw.algebra.coerce(scalar)
        if not is_unit(scalar):
            raise MathDomainError("the scalar of an unstable class must be a unit")
        status = _compatibility_status(gw, scalar)
        object.__setattr__(self, "gw", gw)
        object.__setattr__(self, "scalar", scalar)
        object.__setattr__(self, "compatibility", status)

    def __setattr__(self, name, value):
        raise AttributeError("UnstableGWClass is immutable")

    @property
    def algebra(self) -> EtaleAlgebra:
        return self.gw.algebra

    @property
    def rank(self) -> int:
        return self.gw.rank

    def __eq__(self, other):
        if not isinstance(other, UnstableGWClass):
            return NotImplemented
        return self.gw == other.gw and self.scalar == other.scalar

    def __hash__(self):
        return hash((self.gw, self.scalar))

    def __str__(self):
        return f"{self.gw}\nscalar: {self.scalar}"

    def __repr__(self):
        return f"UnstableGWClass over {self.algebra}, rank {self.rank}"


def _compatibility_status(gw: GrothendieckWittClass, scalar: AlgebraElement) -> str:
    """Verify disc * scalar^-1 is a square where that is decidable."""
    alg = gw.algebra
    if not alg.splits_completely:
        return UNCHECKED
    ratio = gram_determinant(gw) * scalar.inverse()
    for component in ratio.component_scalars():
        if not is_square(component):
            raise MathDomainError(
                "scalar disagrees with the discriminant modulo squares"
            )
    return CHECKED


def make_gwu(matrix_or_class, scalar=None, algebra=None, field=None) -> UnstableGWClass:
    """Build an unstable class; one argument takes the exact determinant."""
    if isinstance(matrix_or_class, GrothendieckWittClass):
        gw = matrix_or_class
    else:
        gw = make_gw_class(matrix_or_class, algebra=algebra, field=field)
    if gw.rank == 0:
        raise MathDomainError("unstable classes need rank at least 1")
    if scalar is None:
        scalar = gram_determinant(gw)
    return UnstableGWClass(gw, gw.algebra.coerce(scalar))


def make_diagonal_unstable_form(field_or_algebra, entries) -> UnstableGWClass:
    """Diagonal form with the product of its entries as the scalar."""
    alg = as_algebra(field_or_algebra)
    entries = [alg.coerce(e) for e in entries]
    if not entries:
        raise MathDomainError("a diagonal unstable form needs entries")
    n = len(entries)
    rows = [
        [entries[i] if i == j else alg.zero() for j in range(n)]
        for i in range(n)
    ]
    gw = make_gw_class(rows, algebra=alg)
    prod = entries[0]
    for e in entries[1:]:
        prod = prod * e
    return UnstableGWClass(gw, prod)


def make_hyperbolic_unstable_form(field_or_algebra, n: int) -> UnstableGWClass:
    """n/2 hyperbolic planes with scalar (-1)^(n/2); n must be even."""
    if n < 2 or n % 2:
        raise MathDomainError("hyperbolic unstable forms need even rank >= 2")
    alg = as_algebra(field_or_algebra)
    entries = []
    for _ in range(n // 2):
        entries.extend([alg.one(), -alg.one()])
    rows = [
        [entries[i] if i == j else alg.zero() for j in range(n)]
        for i in range(n)
    ]
    gw = make_gw_class(rows, algebra=alg)
    return UnstableGWClass(gw, alg.coerce((-1) ** (n // 2)))


def add_gwu(a: UnstableGWClass, b: UnstableGWClass) -> UnstableGWClass:
    """Direct sum on forms, product on scalars."""
    if a.algebra != b.algebra:
        raise FieldMismatchError("unstable classes over different algebras")
    return UnstableGWClass(add_gw(a.gw, b.gw), a.scalar * b.scalar)


def is_isomorphic_gwu(a: UnstableGWClass, b: UnstableGWClass) -> bool:
    """Forms isomorphic and scalars exactly equal."""
    if not is_isomorphic_gw(a.gw, b.gw):
        return False
    return a.scalar.as_scalar() == b.scalar.as_scalar()


def get_sum_decomposition_gwu(a: UnstableGWClass) -> UnstableGWClass:
    """Replace the form by its Witt-decomposed diagonal representative."""
    decomposition = get_witt_decomposition(a.gw)
    entries = decomposition.assembled_entries()
    alg = a.algebra
    rows = [
        [alg.coerce(entries[i]) if i == j else alg.zero() for j in range(len(entries))]
        for i in range(len(entries))
    ]
    gw = make_gw_class(rows, algebra=alg)
    return UnstableGWClass(gw, a.scalar)


def add_gwu_divisorial(classes, points) -> UnstableGWClass:
    """Sum of local unstable classes twisted by squared point differences.

    The form part is the direct sum; the scalar is the product of the
    scalars times prod_{i<j} (r_i - r_j)^(2 m_i m_j) with m_i the ranks.
    """
    classes = list(classes)
    points = list(points)
    if not classes:
        raise MathDomainError("divisorial addition needs at least one class")
    if len(classes) != len(points):
        raise MathDomainError("one point per class is required")
    alg = classes[0].algebra
    base = alg.base
    pts = [p if isinstance(p, Scalar) else Scalar(base, p) for p in points]
    for c in classes:
        if c.algebra != alg:
            raise FieldMismatchError("classes over different algebras")
    for p in pts:
        if p.field != base:
            raise FieldMismatchError("points outside the base field")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise MathDomainError("points must be pairwise distinct")
    gw = classes[0].gw
    for c in classes[1:]:
        gw = add_gw(gw, c.gw)
    scalar = classes[0].scalar
    for c in classes[1:]:
        scalar = scalar * c.scalar
    twist = base.one()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            m = classes[i].rank * classes[j].rank
            twist = twist * (pts[i] - pts[j]) ** (2 * m)
    return UnstableGWClass(gw, scalar * alg.coerce(twist))
