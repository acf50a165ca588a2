"""Grothendieck-Witt classes of symmetric bilinear forms and trace transfers.

A class is represented by a symmetric Gram matrix with unit determinant over
a finite etale algebra; bare fields ride along as their trivial algebras.
Diagonalization performs symmetric Gaussian congruence with leading principal
pivots first and returns the change-of-basis witness, so the contract
transpose(P) * M * P = D can be, and is, checked exactly.

Two transfers to the base field are provided.  The composed transfer follows
the definition: it pairs module and basis indices (module-major, matching the
documented 4x4 example), has rank n * dim(L), and its entries are traces of
b_a * b_c * beta[i][j].  The entrywise variant simply applies the trace to
each Gram entry, keeping rank n; it can degenerate, which is reported as an
error rather than repaired.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import (
    DiagonalizationError,
    FieldMismatchError,
    MathDomainError,
)
from .etale import AlgebraElement, EtaleAlgebra, as_algebra, is_unit, trace
from .fields import FieldSpec, Scalar
from .linalg import (
    block_diag,
    congruent,
    det_bareiss,
    det_cofactor,
    freeze,
    is_square_matrix,
    is_symmetric,
    kron,
)


class GrothendieckWittClass:
    """A symmetric bilinear form up to isomorphism, kept as a Gram matrix."""

    __slots__ = ("algebra", "gram")

    def __init__(self, algebra: EtaleAlgebra, gram, _validated: bool = False):
        if not _validated:
            raise MathDomainError("use make_gw_class to build validated classes")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "gram", freeze(gram))

    def __setattr__(self, name, value):
        raise AttributeError("GrothendieckWittClass is immutable")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def get_matrix(self):
        return self.gram

    def get_algebra(self) -> EtaleAlgebra:
        return self.algebra

    def get_base_field(self) -> FieldSpec:
        if not self.algebra.is_field_like:
            raise MathDomainError(
                "class lives over a proper algebra, not a base field"
            )
        return self.algebra.base

    def scalar_matrix(self):
        """Gram entries as base-field scalars; field-like algebras only."""
        return freeze(
            [[e.as_scalar() for e in row] for row in self.gram]
        )

    def diagonal_entries(self) -> list[AlgebraElement]:
        if any(
            not self.gram[i][j].is_zero()
            for i in range(self.rank)
            for j in range(self.rank)
            if i != j
        ):
            raise MathDomainError("gram matrix is not diagonal")
        return [self.gram[i][i] for i in range(self.rank)]

    def __eq__(self, other):
        if not isinstance(other, GrothendieckWittClass):
            return NotImplemented
        return self.algebra == other.algebra and self.gram == other.gram

    def __hash__(self):
        return hash((self.algebra, self.gram))

    def __str__(self):
        if self.rank == 0:
            return "<rank 0>"
        entries = [[str(e) for e in row] for row in self.gram]
        width = max(len(s) for row in entries for s in row)
        lines = [
            "[ " + "  ".join(s.rjust(width) for s in row) + " ]"
            for row in entries
        ]
        return "\n".join(lines)

    def __repr__(self):
        return f"GrothendieckWittClass over {self.algebra}, rank {self.rank}"


def _resolve_algebra(matrix, algebra_or_field) -> EtaleAlgebra:
    if algebra_or_field is not None:
        return as_algebra(algebra_or_field)
    for row in matrix:
        for entry in row:
            if isinstance(entry, AlgebraElement):
                return entry.algebra
            if isinstance(entry, Scalar):
                return EtaleAlgebra.trivial(entry.field)
    raise MathDomainError("cannot infer the algebra from the matrix entries")


def make_gw_class(matrix, algebra=None, field=None) -> GrothendieckWittClass:
    """Validate a symmetric unit-determinant Gram matrix and wrap it."""
    if field is not None and algebra is not None:
        raise MathDomainError("pass either an algebra or a field, not both")
    rows = [list(row) for row in matrix]
    if not rows:
        raise MathDomainError("empty matrix; use zero_gw for the rank-0 class")
    alg = _resolve_algebra(rows, algebra if algebra is not None else field)
    coerced = freeze([[alg.coerce(e) for e in row] for row in rows])
    if not is_square_matrix(coerced):
        raise MathDomainError("gram matrix must be square")
    if not is_symmetric(coerced):
        raise MathDomainError("gram matrix must be symmetric")
    cls = GrothendieckWittClass(alg, coerced, _validated=True)
    det = gram_determinant(cls)
    if not is_unit(det):
        raise MathDomainError("gram determinant is not a unit")
    return cls


def zero_gw(algebra_or_field) -> GrothendieckWittClass:
    """The rank-0 class, the additive identity."""
    return GrothendieckWittClass(as_algebra(algebra_or_field), (), _validated=True)


def gram_determinant(cls: GrothendieckWittClass) -> AlgebraElement:
    """Determinant of the Gram matrix as an algebra element."""
    alg = cls.algebra
    if cls.rank == 0:
        return alg.one()
    if alg.splits_completely:
        dets = []
        for i in range(len(alg.factors)):
            rows = [
                [e.residues[i].coefficient(0) for e in row] for row in cls.gram
            ]
            dets.append(det_bareiss(rows))
        from .poly import Polynomial

        return AlgebraElement(
            alg, [Polynomial(alg.base, (d,)) for d in dets]
        )
    return det_cofactor(cls.gram, alg.zero())


def add_gw(a: GrothendieckWittClass, b: GrothendieckWittClass) -> GrothendieckWittClass:
    """Direct sum of forms: block-diagonal Gram matrix."""
    if a.algebra != b.algebra:
        raise FieldMismatchError("summands live over different algebras")
    if a.rank == 0:
        return b
    if b.rank == 0:
        return a
    gram = block_diag(a.gram, b.gram, a.algebra.zero())
    return GrothendieckWittClass(a.algebra, gram, _validated=True)


def multiply_gw(a: GrothendieckWittClass, b: GrothendieckWittClass) -> GrothendieckWittClass:
    """Tensor product of forms: Kronecker product of Gram matrices."""
    if a.algebra != b.algebra:
        raise FieldMismatchError("factors live over different algebras")
    if a.rank == 0 or b.rank == 0:
        return zero_gw(a.algebra)
    return GrothendieckWittClass(a.algebra, kron(a.gram, b.gram), _validated=True)


# ---------------------------------------------------------------------------
# Diagonalization
# ---------------------------------------------------------------------------


def _pivot_candidates(alg: EtaleAlgebra):
    """The deterministic palette of mixing coefficients for unit pivots."""
    out = [alg.coerce(1), alg.coerce(-1), alg.coerce(2)]
    for idx, b in zip(alg.basis_index(), alg.basis_elements()):
        if idx[1] >= 1:
            out.append(b)
    return out


def get_diagonal_class(beta: GrothendieckWittClass):
    """Diagonalize by symmetric congruence.

    Returns (diagonal class, P) with transpose(P) * gram * P equal to the
    diagonal Gram matrix; the identity is verified before returning.  Over a
    field this always succeeds.  Over a proper algebra each pivot must be a
    unit; when no candidate basis mix produces one, a DiagonalizationError
    reports the stuck step instead of silently returning a wrong answer.
    """
    alg = beta.algebra
    n = beta.rank
    m = [list(row) for row in beta.gram]
    p = [
        [alg.one() if i == j else alg.zero() for j in range(n)]
        for i in range(n)
    ]
    field_case = alg.is_field_like

    def unit(e: AlgebraElement) -> bool:
        if field_case:
            return not e.is_zero()
        return is_unit(e)

    def swap(i, j):
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    def mix(i, j, lam):
        # basis change e_i <- e_i + lam * e_j
        for r in range(n):
            m[r][i] = m[r][i] + lam * m[r][j]
        for c in range(n):
            m[i][c] = m[i][c] + lam * m[j][c]
        for r in range(n):
            p[r][i] = p[r][i] + lam * p[r][j]

    def eliminate(j, k, c):
        # basis change e_j <- e_j - c * e_k
        for r in range(n):
            m[r][j] = m[r][j] - c * m[r][k]
        for col in range(n):
            m[j][col] = m[j][col] - c * m[k][col]
        for r in range(n):
            p[r][j] = p[r][j] - c * p[r][k]

    for k in range(n):
        if not unit(m[k][k]):
            for j in range(k + 1, n):
                if unit(m[j][j]):
                    swap(k, j)
                    break
            else:
                placed = False
                if field_case:
                    for j in range(k + 1, n):
                        if not m[k][j].is_zero():
                            mix(k, j, alg.one())
                            placed = True
                            break
                else:
                    for j in range(k + 1, n):
                        for lam in _pivot_candidates(alg):
                            cand = (
                                m[k][k]
                                + (lam + lam) * m[k][j]
                                + lam * lam * m[j][j]
                            )
                            if unit(cand):
                                mix(k, j, lam)
                                placed = True
                                break
                        if placed:
                            break
                if not placed:
                    raise DiagonalizationError(
                        f"no unit pivot available at step {k}"
                    )
        inv = m[k][k].inverse()
        for j in range(k + 1, n):
            if not m[k][j].is_zero():
                eliminate(j, k, m[k][j] * inv)

    diag = freeze(m)
    witness = freeze(p)
    if n and congruent(witness, beta.gram) != diag:
        raise MathDomainError("diagonalization witness failed verification")
    return GrothendieckWittClass(alg, diag, _validated=True), witness


# ---------------------------------------------------------------------------
# Transfers
# ---------------------------------------------------------------------------


def transfer_gw(beta: GrothendieckWittClass) -> GrothendieckWittClass:
    """Trace transfer of a form over L down to the base field.

    The output pairs basis vectors (e_i, b_a) in module-major order, has rank
    rank(beta) * dim(L), and entry trace(b_a * b_c * beta[i][j]).  Over the
    trivial algebra this is the identity operation.
    """
    alg = beta.algebra
    base = alg.base
    d = alg.dimension
    n = beta.rank
    basis = alg.basis_elements()
    products = [[basis[a] * basis[c] for c in range(d)] for a in range(d)]
    index = [(i, a) for i in range(n) for a in range(d)]
    rows = []
    for i, a in index:
        row = []
        for j, c in index:
            row.append(trace(products[a][c] * beta.gram[i][j]))
        rows.append(row)
    trivial = EtaleAlgebra.trivial(base)
    lifted = [[trivial.coerce(s) for s in row] for row in rows]
    return make_gw_class(lifted, algebra=trivial)


def transfer_gw_entrywise(beta: GrothendieckWittClass) -> GrothendieckWittClass:
    """Apply the trace to each Gram entry, keeping the rank.

    This variant can produce a degenerate matrix even for a nondegenerate
    input; that case raises a MathDomainError.
    """
    alg = beta.algebra
    trivial = EtaleAlgebra.trivial(alg.base)
    rows = [
        [trivial.coerce(trace(entry)) for entry in row] for row in beta.gram
    ]
    scalar_rows = [[e.as_scalar() for e in row] for row in rows]
    if beta.rank and det_bareiss(scalar_rows).is_zero():
        raise MathDomainError("entrywise transfer is degenerate")
    return GrothendieckWittClass(trivial, rows, _validated=True)
