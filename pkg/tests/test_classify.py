import random
from fractions import Fraction

import pytest

from gwdeg.classify import (
    FormInvariants,
    WittDecomposition,
    get_invariants,
    get_witt_decomposition,
    is_isomorphic_gw,
)
from gwdeg.errors import (
    FieldMismatchError,
    MathDomainError,
    UnsupportedOperationError,
)
from gwdeg.etale import make_etale_algebra
from gwdeg.fields import CC, GF, QQ, RR, Scalar
from gwdeg.gw import add_gw, make_gw_class
from gwdeg.linalg import congruent
from gwdeg.numbertheory import INF_PLACE
from gwdeg.poly import Polynomial


A1_ROWS = [[1, -2, 4], [-2, 2, 0], [4, 0, -7]]
A2_ROWS = [[1, 0, 0], [0, -2, 0], [0, 0, 9]]


def diagonal_class(field, entries):
    n = len(entries)
    rows = [
        [entries[i] if i == j else 0 for j in range(n)] for i in range(n)
    ]
    return make_gw_class(rows, field=field)


def random_congruence(rng, field, n):
    # random unimodular-ish base change: product of shears and sign flips
    p = [[Scalar(field, 1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        lam = Scalar(field, rng.randint(-2, 2))
        for k in range(n):
            p[k][j] = p[k][j] + p[k][i] * lam
    i = rng.randrange(n)
    for k in range(n):
        p[k][i] = -p[k][i]
    return p


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


def test_invariants_of_worked_example():
    inv = get_invariants(make_gw_class(A1_ROWS, field=QQ))
    assert inv.rank == 3
    assert inv.signature == (2, 1)
    assert inv.discriminant.signed == -2
    assert inv.hasse_at(INF_PLACE) == 1
    assert inv.hasse_at(2) == 1
    assert all(v == 1 for v in inv.hasse.values())


def test_invariants_per_field_shape():
    c = diagonal_class(CC, [3, -5])
    inv = get_invariants(c)
    assert inv.rank == 2 and inv.signature is None and inv.hasse is None
    assert inv.discriminant.is_trivial()

    r = get_invariants(diagonal_class(RR, [2, -3, 7]))
    assert r.signature == (2, 1)
    assert r.discriminant.signed == -1
    assert r.hasse is None

    f = get_invariants(diagonal_class(GF(5), [2, 3]))
    assert f.rank == 2
    # 2*3 = 6 = 1 mod 5 is a square
    assert f.discriminant.is_trivial()
    assert f.signature is None


def test_invariants_rejected_off_fields():
    alg = make_etale_algebra(
        QQ, [Polynomial(QQ, [-1, 1]), Polynomial(QQ, [1, 1])]
    )
    one = alg.one()
    c = make_gw_class([[one]], algebra=alg)
    with pytest.raises(UnsupportedOperationError):
        get_invariants(c)
    with pytest.raises(MathDomainError):
        get_invariants(make_gw_class([], field=QQ))


def test_invariants_are_congruence_invariant():
    rng = random.Random(2026_02)
    for field in (QQ, GF(7)):
        for _ in range(40):
            n = rng.randint(1, 4)
            while True:
                entries = [rng.randint(-9, 9) for _ in range(n)]
                if field.p:
                    entries = [e % field.p for e in entries]
                if all(e != 0 for e in entries):
                    break
            c = diagonal_class(field, entries)
            p = random_congruence(rng, field, n)
            m = congruent(p, c.scalar_matrix())
            # base changes above can be singular; skip those draws
            try:
                c2 = make_gw_class(m, field=field)
            except MathDomainError:
                continue
            ia, ib = get_invariants(c), get_invariants(c2)
            assert (ia.rank, ia.signature, ia.discriminant) == (
                ib.rank,
                ib.signature,
                ib.discriminant,
            )
            if ia.hasse is not None:
                for v in set(ia.hasse) | set(ib.hasse):
                    assert ia.hasse_at(v) == ib.hasse_at(v)
            assert is_isomorphic_gw(c, c2)


# ---------------------------------------------------------------------------
# isomorphism per base field
# ---------------------------------------------------------------------------


def test_iso_complex_rank_only():
    assert is_isomorphic_gw(diagonal_class(CC, [1]), diagonal_class(CC, [-1]))
    assert not is_isomorphic_gw(
        diagonal_class(CC, [1]), diagonal_class(CC, [1, 1])
    )


def test_iso_real_needs_signature():
    assert is_isomorphic_gw(
        diagonal_class(RR, [2, 3]), diagonal_class(RR, [1, 1])
    )
    assert not is_isomorphic_gw(
        diagonal_class(RR, [1, 1]), diagonal_class(RR, [1, -1])
    )


def test_iso_prime_field_uses_discriminant():
    assert is_isomorphic_gw(diagonal_class(GF(5), [2]), diagonal_class(GF(5), [3]))
    assert not is_isomorphic_gw(
        diagonal_class(GF(5), [1]), diagonal_class(GF(5), [2])
    )
    # over GF(7): disc classes of <1,1> and <3,5> match (15 = 1 mod 7)
    assert is_isomorphic_gw(
        diagonal_class(GF(7), [1, 1]), diagonal_class(GF(7), [3, 5])
    )


def test_iso_rationals_worked_example():
    a1 = make_gw_class(A1_ROWS, field=QQ)
    a2 = make_gw_class(A2_ROWS, field=QQ)
    assert is_isomorphic_gw(a1, a2)
    assert not is_isomorphic_gw(a1, diagonal_class(QQ, [1, 2, 9]))


def test_iso_rationals_needs_hasse():
    # <1, 7> and <3, 21>: same rank, signature, and discriminant, but the
    # Hasse symbols at 3 and 7 differ, so only the full tuple separates them
    a = diagonal_class(QQ, [1, 7])
    b = diagonal_class(QQ, [3, 21])
    ia, ib = get_invariants(a), get_invariants(b)
    assert ia.rank == ib.rank
    assert ia.signature == ib.signature
    assert ia.discriminant == ib.discriminant
    assert ia.hasse_at(3) != ib.hasse_at(3)
    assert ia.hasse_at(7) != ib.hasse_at(7)
    assert not is_isomorphic_gw(a, b)


def test_iso_rejects_mixed_fields():
    with pytest.raises(FieldMismatchError):
        is_isomorphic_gw(diagonal_class(QQ, [1]), diagonal_class(GF(5), [1]))


def test_iso_scaling_by_squares():
    rng = random.Random(90125)
    for _ in range(25):
        n = rng.randint(1, 4)
        entries = []
        while len(entries) < n:
            e = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            if e != 0:
                entries.append(e)
        sq = [e * Fraction(rng.randint(1, 6)) ** 2 for e in entries]
        assert is_isomorphic_gw(
            diagonal_class(QQ, entries), diagonal_class(QQ, sq)
        )


# ---------------------------------------------------------------------------
# Witt decomposition
# ---------------------------------------------------------------------------


def test_witt_of_worked_example():
    w = get_witt_decomposition(make_gw_class(A1_ROWS, field=QQ))
    assert w.hyperbolic_count == 1
    assert [s.value for s in w.anisotropic] == [2]
    assert [s.value for s in w.assembled_entries()] == [2, 1, -1]
    assert w.rank == 3


def test_witt_small_cases():
    w = get_witt_decomposition(diagonal_class(QQ, [1, -1]))
    assert w.hyperbolic_count == 1 and w.anisotropic == ()

    w = get_witt_decomposition(diagonal_class(QQ, [1, 1, 1, 1]))
    assert w.hyperbolic_count == 0
    assert len(w.anisotropic) == 4

    # -27 reduces to the class of -3, pairing with 3
    w = get_witt_decomposition(diagonal_class(QQ, [3, -27]))
    assert w.hyperbolic_count == 1 and w.anisotropic == ()


def test_witt_plane_without_entry_pairing():
    # x^2 + y^2 - 2 z^2 vanishes at (1, 1, 1) although no two diagonal
    # entries lie in opposite square classes
    w = get_witt_decomposition(diagonal_class(QQ, [1, 1, -2]))
    assert w.hyperbolic_count == 1
    assert [s.value for s in w.anisotropic] == [2]


def test_witt_per_field():
    w = get_witt_decomposition(diagonal_class(CC, [5, 3, 2]))
    assert w.hyperbolic_count == 1 and len(w.anisotropic) == 1

    w = get_witt_decomposition(diagonal_class(RR, [1, 2, -3]))
    assert w.hyperbolic_count == 1
    assert [s.value for s in w.anisotropic] == [1]

    # <1, 1> over GF(7): -1 is not a square mod 7, form is anisotropic
    w = get_witt_decomposition(diagonal_class(GF(7), [1, 1]))
    assert w.hyperbolic_count == 0 and len(w.anisotropic) == 2
    # over GF(5) the same form splits since -1 = 4 is a square
    w = get_witt_decomposition(diagonal_class(GF(5), [1, 1]))
    assert w.hyperbolic_count == 1 and w.anisotropic == ()


def _assert_valid_decomposition(c, w):
    field = c.get_base_field()
    assert w.rank == c.rank
    assembled = diagonal_class(field, [s.value for s in w.assembled_entries()])
    assert is_isomorphic_gw(c, assembled)
    if w.anisotropic:
        rest = diagonal_class(field, [s.value for s in w.anisotropic])
        again = get_witt_decomposition(rest)
        assert again.hyperbolic_count == 0


def test_witt_random_forms_are_consistent():
    rng = random.Random(771)
    for field in (QQ, RR, CC, GF(3), GF(11)):
        for _ in range(30):
            n = rng.randint(1, 5)
            while True:
                entries = [rng.randint(-20, 20) for _ in range(n)]
                if field.p:
                    entries = [e % field.p for e in entries]
                if all(e != 0 for e in entries):
                    break
            c = diagonal_class(field, entries)
            _assert_valid_decomposition(c, get_witt_decomposition(c))


def test_witt_anisotropic_bound_over_prime_fields():
    rng = random.Random(8)
    for p in (3, 5, 7, 11):
        field = GF(p)
        for _ in range(20):
            n = rng.randint(1, 6)
            entries = [rng.randint(1, p - 1) for _ in range(n)]
            w = get_witt_decomposition(diagonal_class(field, entries))
            # no anisotropic form of rank 3 or more exists over GF(p)
            assert len(w.anisotropic) <= 2


def test_witt_sum_with_negation_is_hyperbolic():
    rng = random.Random(31415)
    for _ in range(20):
        n = rng.randint(1, 3)
        entries = [rng.randint(1, 30) * rng.choice([1, -1]) for _ in range(n)]
        c = diagonal_class(QQ, entries)
        neg = diagonal_class(QQ, [-e for e in entries])
        w = get_witt_decomposition(add_gw(c, neg))
        assert w.hyperbolic_count == n and w.anisotropic == ()
