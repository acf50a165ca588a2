"""Classification of symmetric bilinear forms over the supported base fields.

The invariants computed are the classical complete sets: rank alone under
complex semantics; rank and signature over the formal reals; rank and
discriminant square class over an odd prime field; and rank, signature,
discriminant, and the Hasse symbol map over the rationals, where the Hasse
invariant of a diagonal form <a_1, ..., a_n> at a place v is the product of
Hilbert symbols (a_i, a_j)_v over i < j.

Witt decomposition returns the number of hyperbolic planes and a diagonal
anisotropic remainder.  Over the rationals hyperbolic splitting is decided
through local isotropy: a plane is peeled off while the residual invariants
describe an isotropic form, and when any plane was peeled the remaining
diagonal entries are rebuilt from the residual invariants by a deterministic
search over signed squarefree candidates.  Square-class pairs {a, -a} alone
are not enough: <1, 1, -2> contains a hyperbolic plane that no pairing of
reduced entries detects.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, MathDomainError, UnsupportedOperationError
from .fields import FieldKind, FieldSpec, Scalar
from .gw import GrothendieckWittClass, get_diagonal_class
from .numbertheory import (
    INF_PLACE,
    SquareClass,
    hilbert_symbol,
    least_nonsquare,
    legendre_symbol,
    rational_places,
    reduce_square_class,
)
from .primes import squarefree_part


@dataclass(frozen=True)
class FormInvariants:
    """The complete invariant tuple of a form over its base field.

    signature is None unless the field is ordered; hasse is None except over
    the rationals, where it maps places (primes or "inf") to +-1 and is +1 at
    every place it does not list.
    """

    field: FieldSpec
    rank: int
    discriminant: SquareClass
    signature: tuple[int, int] | None = None
    hasse: dict | None = None

    def hasse_at(self, v) -> int:
        if self.hasse is None:
            raise MathDomainError("no Hasse data for this field")
        return self.hasse.get(v, 1)


@dataclass(frozen=True)
class WittDecomposition:
    """h hyperbolic planes plus a diagonal anisotropic remainder."""

    field: FieldSpec
    hyperbolic_count: int
    anisotropic: tuple[Scalar, ...]

    @property
    def rank(self) -> int:
        return 2 * self.hyperbolic_count + len(self.anisotropic)

    def assembled_entries(self) -> list[Scalar]:
        """Diagonal entries: anisotropic part first, then <1, -1> pairs."""
        out = list(self.anisotropic)
        for _ in range(self.hyperbolic_count):
            out.append(self.field.one())
            out.append(-self.field.one())
        return out


def _reduced_diagonal(beta: GrothendieckWittClass) -> list[SquareClass]:
    if not beta.algebra.is_field_like:
        raise UnsupportedOperationError(
            "classification is only defined over a base field"
        )
    if beta.rank == 0:
        raise MathDomainError("the rank-0 class is not classified")
    diag, _ = get_diagonal_class(beta)
    return [reduce_square_class(e.as_scalar()) for e in diag.diagonal_entries()]


def _hasse_map(entries: list[int]) -> dict:
    places = rational_places(*entries) if entries else [INF_PLACE, 2]
    out = {}
    for v in places:
        sym = 1
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                sym *= hilbert_symbol(entries[i], entries[j], v)
        out[v] = sym
    return out


def get_invariants(beta: GrothendieckWittClass) -> FormInvariants:
    """Rank, discriminant, and the field-appropriate extras."""
    classes = _reduced_diagonal(beta)
    field = beta.get_base_field()
    rank = len(classes)
    disc = classes[0]
    for c in classes[1:]:
        disc = disc * c
    kind = field.kind
    if kind is FieldKind.FORMAL_COMPLEX:
        return FormInvariants(field, rank, disc)
    if kind is FieldKind.PRIME_FIELD:
        return FormInvariants(field, rank, disc)
    signature = (
        sum(1 for c in classes if c.sign > 0),
        sum(1 for c in classes if c.sign < 0),
    )
    if kind is FieldKind.FORMAL_REAL:
        return FormInvariants(field, rank, disc, signature)
    hasse = _hasse_map([c.signed for c in classes])
    return FormInvariants(field, rank, disc, signature, hasse)


def _same_hasse(a: dict, b: dict) -> bool:
    for v in set(a) | set(b):
        if a.get(v, 1) != b.get(v, 1):
            return False
    return True


def is_isomorphic_gw(a: GrothendieckWittClass, b: GrothendieckWittClass) -> bool:
    """Field-specific complete invariant comparison."""
    if not a.algebra.is_field_like or not b.algebra.is_field_like:
        raise UnsupportedOperationError(
            "isomorphism testing is only defined over a base field"
        )
    if a.algebra.base != b.algebra.base:
        raise FieldMismatchError("classes live over different base fields")
    if a.rank == 0 or b.rank == 0:
        return a.rank == b.rank
    ia, ib = get_invariants(a), get_invariants(b)
    if ia.rank != ib.rank:
        return False
    kind = a.algebra.base.kind
    if kind is FieldKind.FORMAL_COMPLEX:
        return True
    if kind is FieldKind.PRIME_FIELD:
        return ia.discriminant == ib.discriminant
    if kind is FieldKind.FORMAL_REAL:
        return ia.signature == ib.signature
    return (
        ia.signature == ib.signature
        and ia.discriminant == ib.discriminant
        and _same_hasse(ia.hasse, ib.hasse)
    )


# ---------------------------------------------------------------------------
# Rational isotropy through local conditions
# ---------------------------------------------------------------------------


def _square_in_qv(d: int, v) -> bool:
    """Is the squarefree integer d a square in the completion at v."""
    if d == 1:
        return True
    if v == INF_PLACE:
        return d > 0
    if v == 2:
        return d % 2 == 1 and d % 8 == 1
    if d % v == 0:
        return False
    return legendre_symbol(d, v) == 1


def _bad_places(d: int, eps: dict) -> list:
    places = set(rational_places(d)) | set(eps)
    return sorted(places, key=lambda v: -1 if v == INF_PLACE else v)


def _is_isotropic_q(n: int, r: int, s: int, d: int, eps: dict) -> bool:
    """Isotropy of a rational form given its invariants, via Hasse-Minkowski."""
    if n < 2 or r == 0 or s == 0:
        return False
    if n == 2:
        return d == -1
    if n == 3:
        return all(
            eps.get(v, 1) == hilbert_symbol(-1, -d, v)
            for v in _bad_places(d, eps)
        )
    if n == 4:
        return all(
            (not _square_in_qv(d, v)) or eps.get(v, 1) == hilbert_symbol(-1, -1, v)
            for v in _bad_places(d, eps)
        )
    return True


def _sqfree_mul(a: int, b: int) -> int:
    return squarefree_part(a * b)


def _peel_plane_q(n, r, s, d, eps):
    """Invariants of q' when q = <1, -1> + q'."""
    d_new = _sqfree_mul(d, -1)
    eps_new = {}
    for v in set(eps) | set(rational_places(d)):
        val = eps.get(v, 1) * hilbert_symbol(-1, -d, v)
        if val != 1:
            eps_new[v] = val
    return n - 2, r - 1, s - 1, d_new, eps_new


def _candidate_entries():
    """Signed squarefree integers in a fixed order: 1, -1, 2, -2, 3, ..."""
    m = 1
    while m <= 10**6:
        if squarefree_part(m) == m:
            yield m
            yield -m
        m += 1
    raise MathDomainError("anisotropic reconstruction search exhausted")


def _detach_entry_q(a: int, n, r, s, d, eps):
    """Invariants of q' when q = <a> + q'."""
    d_new = _sqfree_mul(d, a)
    eps_new = {}
    for v in set(eps) | set(rational_places(a, d_new)):
        val = eps.get(v, 1) * hilbert_symbol(a, d_new, v)
        if val != 1:
            eps_new[v] = val
    if a > 0:
        return n - 1, r - 1, s, d_new, eps_new
    return n - 1, r, s - 1, d_new, eps_new


def _binary_realizable_q(d: int, eps: dict, r: int, s: int) -> bool:
    """Can a rank-2 rational form carry these residual invariants."""
    if (d > 0) != (s % 2 == 0):
        return False
    if eps.get(INF_PLACE, 1) != (-1) ** (s * (s - 1) // 2):
        return False
    for v in _bad_places(d, eps):
        if eps.get(v, 1) == -1 and _square_in_qv(_sqfree_mul(d, -1), v):
            return False
    return True


def _entries_from_invariants_q(n, r, s, d, eps) -> list[int]:
    """A diagonal form over the rationals with the given invariants.

    Entries are chosen by a deterministic search over signed squarefree
    integers; the caller guarantees the invariants are realizable, which
    makes the search terminate.
    """
    if n == 0:
        if d != 1 or eps:
            raise MathDomainError("inconsistent rank-0 invariants")
        return []
    if n == 1:
        if d > 0 and (r, s) != (1, 0) or d < 0 and (r, s) != (0, 1) or eps:
            raise MathDomainError("inconsistent rank-1 invariants")
        return [d]
    if n == 2:
        for a in _candidate_entries():
            b = _sqfree_mul(a, d)
            sig = (int(a > 0) + int(b > 0), int(a < 0) + int(b < 0))
            if sig != (r, s):
                continue
            cand_eps = _hasse_map([a, b])
            if _same_hasse(cand_eps, eps):
                return sorted([a, b], key=lambda t: (t < 0, abs(t)))
        raise MathDomainError("binary reconstruction failed")
    for a in _candidate_entries():
        if a > 0 and r == 0 or a < 0 and s == 0:
            continue
        rest = _detach_entry_q(a, n, r, s, d, eps)
        if n - 1 == 2 and not _binary_realizable_q(
            rest[3], rest[4], rest[1], rest[2]
        ):
            continue
        return [a] + _entries_from_invariants_q(*rest)
    raise MathDomainError("reconstruction search failed")


def _witt_q(classes: list[SquareClass]) -> tuple[int, list[int]]:
    entries = [c.signed for c in classes]
    # phase 1: explicit square-class pairs {a, -a}
    h = 0
    remaining: list[int] = []
    counts: dict[int, int] = {}
    for e in entries:
        counts[e] = counts.get(e, 0) + 1
    for mag in sorted({abs(e) for e in entries}):
        k = min(counts.get(mag, 0), counts.get(-mag, 0))
        h += k
        counts[mag] = counts.get(mag, 0) - k
        counts[-mag] = counts.get(-mag, 0) - k
    for e in entries:
        if counts.get(e, 0) > 0:
            counts[e] -= 1
            remaining.append(e)
    # phase 2: local isotropy on the residual invariants
    n = len(remaining)
    if n < 2:
        return h, sorted(remaining, key=lambda t: (t < 0, abs(t)))
    r = sum(1 for e in remaining if e > 0)
    s = n - r
    d = 1
    for e in remaining:
        d = _sqfree_mul(d, e)
    eps = {v: val for v, val in _hasse_map(remaining).items() if val != 1}
    peeled = 0
    while n >= 2 and _is_isotropic_q(n, r, s, d, eps):
        n, r, s, d, eps = _peel_plane_q(n, r, s, d, eps)
        peeled += 1
    if peeled == 0:
        return h, sorted(remaining, key=lambda t: (t < 0, abs(t)))
    rebuilt = _entries_from_invariants_q(n, r, s, d, eps)
    return h + peeled, sorted(rebuilt, key=lambda t: (t < 0, abs(t)))


def get_witt_decomposition(beta: GrothendieckWittClass) -> WittDecomposition:
    """Split off hyperbolic planes and present what remains diagonally."""
    classes = _reduced_diagonal(beta)
    field = beta.get_base_field()
    kind = field.kind
    if kind is FieldKind.FORMAL_COMPLEX:
        n = len(classes)
        aniso = [field.one()] * (n % 2)
        return WittDecomposition(field, n // 2, tuple(aniso))
    if kind is FieldKind.FORMAL_REAL:
        r = sum(1 for c in classes if c.sign > 0)
        s = len(classes) - r
        h = min(r, s)
        aniso = [field.one()] * (r - h) + [-field.one()] * (s - h)
        return WittDecomposition(field, h, tuple(aniso))
    if kind is FieldKind.PRIME_FIELD:
        return _witt_p(field, classes)
    h, entries = _witt_q(classes)
    return WittDecomposition(
        field, h, tuple(Scalar(field, e) for e in entries)
    )


def _witt_p(field: FieldSpec, classes: list[SquareClass]) -> WittDecomposition:
    """Peel planes over an odd prime field by discriminant arithmetic."""
    p = field.p
    n = len(classes)
    nonsquare_count = sum(1 for c in classes if c.sqfree != 1)
    disc_is_square = nonsquare_count % 2 == 0
    minus_one_square = legendre_symbol(-1, p) == 1
    h = 0
    while n >= 3:
        # every form of rank 3 or more over a finite field is isotropic
        n -= 2
        h += 1
        if not minus_one_square:
            disc_is_square = not disc_is_square
    if n == 2:
        neg_disc_square = disc_is_square == minus_one_square
        if neg_disc_square:
            n = 0
            h += 1
    nu = least_nonsquare(p)
    if n == 0:
        aniso: tuple[Scalar, ...] = ()
    elif n == 1:
        aniso = (Scalar(field, 1 if disc_is_square else nu),)
    else:
        aniso = (
            Scalar(field, 1),
            Scalar(field, 1 if disc_is_square else nu),
        )
    return WittDecomposition(field, h, aniso)
