"""Finite etale algebras presented as products of separable quotients.

An algebra is a finite product L = prod_i k[x]/(f_i) with every f_i monic of
positive degree and separable (gcd(f_i, f_i') constant).  Elements are tuples
of residue polynomials, one per factor, each reduced modulo its factor.  The
monomial basis runs factor-major: all powers of the first factor's class of
x, then the second factor's, and so on.

Fields embed through the trivial algebra k[x]/(x); constructors that accept
an algebra also accept a bare FieldSpec and wrap it on the fly.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, MathDomainError
from .fields import FieldSpec, Scalar
from .linalg import det_bareiss, freeze
from .poly import Polynomial, poly_gcd, poly_gcdex


class EtaleAlgebra:
    """A product of separable monic quotients of k[x]."""

    __slots__ = ("base", "factors", "dimension", "_basis_index")

    def __init__(self, base: FieldSpec, factors, _checked: bool = False):
        factors = tuple(
            f if isinstance(f, Polynomial) else Polynomial(base, f)
            for f in factors
        )
        if not factors:
            raise MathDomainError("an etale algebra needs at least one factor")
        for f in factors:
            if f.field != base:
                raise FieldMismatchError("factor over a different base field")
            if f.is_zero() or f.degree < 1:
                raise MathDomainError("factors must have positive degree")
            if not f.is_monic():
                raise MathDomainError(f"factor {f} is not monic")
        if not _checked:
            for f in factors:
                g = poly_gcd(f, f.derivative())
                if g.degree != 0:
                    raise MathDomainError(
                        f"factor {f} is not separable (repeated factor {g})"
                    )
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "dimension", sum(f.degree for f in factors))
        index = []
        for i, f in enumerate(factors):
            for j in range(f.degree):
                index.append((i, j))
        object.__setattr__(self, "_basis_index", tuple(index))
        if not _checked:
            # redundant cross-check: separability makes the trace pairing
            # nondegenerate, so its determinant must not vanish
            if det_bareiss(trace_form_matrix(self)).is_zero():
                raise MathDomainError("trace form is degenerate")

    def __setattr__(self, name, value):
        raise AttributeError("EtaleAlgebra is immutable")

    @classmethod
    def trivial(cls, field: FieldSpec) -> "EtaleAlgebra":
        return cls(field, (Polynomial.variable(field),), _checked=True)

    @property
    def is_trivial(self) -> bool:
        return (
            len(self.factors) == 1
            and self.factors[0] == Polynomial.variable(self.base)
        )

    @property
    def is_field_like(self) -> bool:
        """A single linear factor: the algebra is a copy of its base field."""
        return len(self.factors) == 1 and self.factors[0].degree == 1

    @property
    def splits_completely(self) -> bool:
        return all(f.degree == 1 for f in self.factors)

    def basis_index(self):
        return self._basis_index

    # ---- element constructors ----

    def element(self, residues) -> "AlgebraElement":
        return AlgebraElement(self, residues)

    def coerce(self, value) -> "AlgebraElement":
        if isinstance(value, AlgebraElement):
            if value.algebra != self:
                raise FieldMismatchError("element of a different algebra")
            return value
        if isinstance(value, (int, Fraction, Scalar)):
            c = Scalar(self.base, value)
            return AlgebraElement(
                self, [Polynomial(self.base, (c,)) for _ in self.factors]
            )
        if isinstance(value, Polynomial):
            return AlgebraElement(self, [value for _ in self.factors])
        raise MathDomainError(f"cannot coerce {value!r} into the algebra")

    def zero(self) -> "AlgebraElement":
        return self.coerce(0)

    def one(self) -> "AlgebraElement":
        return self.coerce(1)

    def generator(self) -> "AlgebraElement":
        """The image of x under the diagonal map into every factor."""
        return self.coerce(Polynomial.variable(self.base))

    def basis_elements(self) -> list["AlgebraElement"]:
        out = []
        for i, j in self._basis_index:
            residues = [Polynomial.zero(self.base) for _ in self.factors]
            residues[i] = Polynomial.monomial(self.base, j)
            out.append(AlgebraElement(self, residues))
        return out

    def linear_roots(self) -> list[Scalar]:
        """The root of each factor, defined when the algebra splits."""
        if not self.splits_completely:
            raise MathDomainError("algebra has a factor of degree above one")
        return [-f.coefficient(0) for f in self.factors]

    # ---- equality and display ----

    def __eq__(self, other):
        if not isinstance(other, EtaleAlgebra):
            return NotImplemented
        return self.base == other.base and self.factors == other.factors

    def __hash__(self):
        return hash((self.base, self.factors))

    def __str__(self):
        var = self.factors[0].var
        facs = "x".join(f"({f})" for f in self.factors)
        return f"{self.base.descriptor()}[{var}]/{facs}"

    def __repr__(self):
        return f"EtaleAlgebra({self})"


def as_algebra(algebra_or_field) -> EtaleAlgebra:
    if isinstance(algebra_or_field, EtaleAlgebra):
        return algebra_or_field
    if isinstance(algebra_or_field, FieldSpec):
        return EtaleAlgebra.trivial(algebra_or_field)
    raise MathDomainError("expected an etale algebra or a base field")


class AlgebraElement:
    """An element of an etale algebra: one reduced residue per factor."""

    __slots__ = ("algebra", "residues")

    def __init__(self, algebra: EtaleAlgebra, residues):
        residues = tuple(
            r if isinstance(r, Polynomial) else Polynomial(algebra.base, r)
            for r in residues
        )
        if len(residues) != len(algebra.factors):
            raise MathDomainError("one residue per factor is required")
        reduced = []
        for r, f in zip(residues, algebra.factors):
            if r.field != algebra.base:
                raise FieldMismatchError("residue over a different base field")
            reduced.append(r % f if r.degree >= f.degree else r)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "residues", tuple(reduced))

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            if other.algebra != self.algebra:
                raise FieldMismatchError("elements of different algebras")
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.algebra.coerce(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.algebra, [a + b for a, b in zip(self.residues, o.residues)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.algebra, [a - b for a, b in zip(self.residues, o.residues)]
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return AlgebraElement(
            self.algebra,
            [
                (a * b) % f
                for a, b, f in zip(self.residues, o.residues, self.algebra.factors)
            ],
        )

    __rmul__ = __mul__

    def __neg__(self):
        return AlgebraElement(self.algebra, [-a for a in self.residues])

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.algebra.one()
        for _ in range(exponent):
            out = out * self
        return out

    def inverse(self) -> "AlgebraElement":
        """Componentwise inverse through extended Euclid mod each factor."""
        out = []
        for r, f in zip(self.residues, self.algebra.factors):
            d, u, _ = poly_gcdex(r, f)
            if d.degree != 0:
                raise MathDomainError("element is not a unit")
            out.append(u % f)
        return AlgebraElement(self.algebra, out)

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.residues)

    def as_scalar(self) -> Scalar:
        """The underlying base-field scalar, defined over field-like algebras."""
        if not self.algebra.is_field_like:
            raise MathDomainError("element does not reduce to a base scalar")
        r = self.residues[0]
        return r.coefficient(0)

    def component_scalars(self) -> list[Scalar]:
        """Per-factor values, defined when the algebra splits completely."""
        if not self.algebra.splits_completely:
            raise MathDomainError("algebra has a factor of degree above one")
        return [r.coefficient(0) for r in self.residues]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.algebra.coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra == other.algebra and self.residues == other.residues

    def __hash__(self):
        return hash((self.algebra, self.residues))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if len(self.residues) == 1:
            return str(self.residues[0])
        return "(" + ", ".join(str(r) for r in self.residues) + ")"

    def __repr__(self):
        return f"AlgebraElement({self.algebra}, {self})"


# ---------------------------------------------------------------------------
# Spec operations
# ---------------------------------------------------------------------------


def make_etale_algebra(base: FieldSpec, factors) -> EtaleAlgebra:
    """Build and validate a product of separable monic quotients."""
    return EtaleAlgebra(base, factors)


def multiplication_matrix(u: AlgebraElement):
    """Matrix of multiplication by u on the monomial basis, columns = images."""
    alg = u.algebra
    d = alg.dimension
    basis = alg.basis_index()
    offsets = {}
    pos = 0
    for i, f in enumerate(alg.factors):
        offsets[i] = pos
        pos += f.degree
    rows = [[alg.base.zero()] * d for _ in range(d)]
    for col, (i, j) in enumerate(basis):
        image = (u.residues[i] * Polynomial.monomial(alg.base, j)) % alg.factors[i]
        for a in range(alg.factors[i].degree):
            rows[offsets[i] + a][col] = image.coefficient(a)
    return freeze(rows)


def trace(u: AlgebraElement) -> Scalar:
    """Trace of multiplication by u."""
    m = multiplication_matrix(u)
    acc = u.algebra.base.zero()
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def trace_form_matrix(algebra: EtaleAlgebra):
    """Gram matrix of (u, v) -> trace(u*v) on the monomial basis."""
    # basis vectors from different factors multiply to zero, so the form is
    # block diagonal; entries within a block are traces of powers of x
    d = algebra.dimension
    rows = [[algebra.base.zero()] * d for _ in range(d)]
    pos = 0
    for i, f in enumerate(algebra.factors):
        e = f.degree
        power_traces = _power_traces(algebra, i, 2 * e - 2)
        for a in range(e):
            for b in range(e):
                rows[pos + a][pos + b] = power_traces[a + b]
        pos += e
    return freeze(rows)


def _power_traces(algebra: EtaleAlgebra, i: int, upto: int) -> list[Scalar]:
    """Traces of x^0 .. x^upto acting on the single factor i."""
    f = algebra.factors[i]
    base = algebra.base
    x = Polynomial.variable(base)
    out = []
    power = Polynomial.one(base) % f
    for _ in range(upto + 1):
        out.append(_factor_trace(power, f))
        power = (power * x) % f
    return out


def _factor_trace(r: Polynomial, f: Polynomial) -> Scalar:
    """Trace of multiplication by r on k[x]/(f)."""
    e = f.degree
    base = f.field
    acc = base.zero()
    x = Polynomial.variable(base)
    col = r % f
    # diagonal of the multiplication matrix, column by column
    power = Polynomial.one(base)
    for j in range(e):
        image = (col * power) % f
        acc = acc + image.coefficient(j)
        power = (power * x) % f
    return acc


def trace_form(algebra_or_field) -> "object":
    """The trace form as a Grothendieck-Witt class over the base field."""
    from .gw import GrothendieckWittClass

    algebra = as_algebra(algebra_or_field)
    rows = trace_form_matrix(algebra)
    trivial = EtaleAlgebra.trivial(algebra.base)
    lifted = freeze(
        [[trivial.coerce(entry) for entry in row] for row in rows]
    )
    return GrothendieckWittClass(trivial, lifted, _validated=True)


def is_unit(u: AlgebraElement) -> bool:
    """True when multiplication by u is invertible."""
    return all(
        poly_gcd(r, f).degree == 0 if not r.is_zero() else False
        for r, f in zip(u.residues, u.algebra.factors)
    )
