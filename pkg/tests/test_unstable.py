import pytest

from gwdeg.errors import FieldMismatchError, MathDomainError
from gwdeg.etale import make_etale_algebra
from gwdeg.fields import GF, QQ
from gwdeg.gw import make_gw_class
from gwdeg.poly import Polynomial
from gwdeg.unstable import (
    CHECKED,
    UNCHECKED,
    UnstableGWClass,
    add_gwu,
    add_gwu_divisorial,
    get_sum_decomposition_gwu,
    is_isomorphic_gwu,
    make_diagonal_unstable_form,
    make_gwu,
    make_hyperbolic_unstable_form,
)


A1_ROWS = [[1, -2, 4], [-2, 2, 0], [4, 0, -7]]
A2_ROWS = [[1, 0, 0], [0, -2, 0], [0, 0, 9]]


def quad_algebra(c=1):
    # QQ[x]/(x^2 - c)
    return make_etale_algebra(QQ, [Polynomial(QQ, [-c, 0, 1])])


def split_algebra():
    x = Polynomial(QQ, [0, 1])
    return make_etale_algebra(QQ, [x - 1, x + 1])


# ---------------------------------------------------------------------------
# construction and the default scalar
# ---------------------------------------------------------------------------


def test_default_scalar_is_the_determinant():
    alg = quad_algebra()
    x = alg.generator()
    beta = [[alg.one(), alg.coerce(2)], [alg.coerce(2), x]]
    u = make_gwu(beta, algebra=alg)
    assert u.scalar == x - 4
    explicit = make_gwu(beta, x - 4, algebra=alg)
    assert u == explicit


def test_compatibility_depends_on_splitting():
    # a quadratic residue factor cannot be checked componentwise
    alg = quad_algebra(-1)
    x = alg.generator()
    u = make_gwu([[x]], algebra=alg)
    assert u.compatibility == UNCHECKED
    # even a scalar unrelated to the determinant is accepted there
    v = make_gwu([[x]], 3, algebra=alg)
    assert v.compatibility == UNCHECKED

    spl = split_algebra()
    w = make_gwu([[spl.one()]], algebra=spl)
    assert w.compatibility == CHECKED


def test_scalar_square_class_is_enforced_where_decidable():
    u = make_gwu([[1, 0], [0, 15]], 60, field=QQ)  # 15/60 = 1/4 is a square
    assert u.compatibility == CHECKED
    with pytest.raises(MathDomainError):
        make_gwu([[1, 0], [0, 1]], 3, field=QQ)
    spl = split_algebra()
    with pytest.raises(MathDomainError):
        make_gwu([[spl.one()]], 3, algebra=spl)


def test_scalar_must_be_a_unit():
    with pytest.raises(MathDomainError):
        make_gwu([[1]], 0, field=QQ)
    alg = split_algebra()
    x = alg.generator()
    with pytest.raises(MathDomainError):
        make_gwu([[alg.one()]], x - 1, algebra=alg)


def test_rank_zero_is_rejected():
    with pytest.raises(MathDomainError):
        make_gwu([], field=QQ)


def test_classes_are_immutable():
    u = make_gwu([[1]], field=QQ)
    with pytest.raises(AttributeError):
        u.scalar = None


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def test_diagonal_constructor():
    u = make_diagonal_unstable_form(QQ, [2, -3])
    assert u.rank == 2
    assert u.scalar.as_scalar().value == -6
    assert u.compatibility == CHECKED
    m = u.gw.scalar_matrix()
    assert [[e.value for e in row] for row in m] == [[2, 0], [0, -3]]
    with pytest.raises(MathDomainError):
        make_diagonal_unstable_form(QQ, [])


def test_hyperbolic_constructor():
    u = make_hyperbolic_unstable_form(QQ, 2)
    assert u.scalar.as_scalar().value == -1
    v = make_hyperbolic_unstable_form(QQ, 4)
    assert v.scalar.as_scalar().value == 1
    assert [e.as_scalar().value for e in v.gw.diagonal_entries()] == [1, -1, 1, -1]
    for bad in (0, 1, 3, -2):
        with pytest.raises(MathDomainError):
            make_hyperbolic_unstable_form(QQ, bad)


def test_hyperbolic_over_prime_field():
    u = make_hyperbolic_unstable_form(GF(7), 2)
    assert u.scalar.as_scalar().value == 6  # -1 mod 7
    assert u.compatibility == CHECKED


# ---------------------------------------------------------------------------
# addition and isomorphism
# ---------------------------------------------------------------------------


def test_add_multiplies_scalars():
    a = make_diagonal_unstable_form(QQ, [2])
    b = make_diagonal_unstable_form(QQ, [3, 5])
    s = add_gwu(a, b)
    assert s.rank == 3
    assert s.scalar.as_scalar().value == 30
    assert s.compatibility == CHECKED


def test_add_rejects_mixed_algebras():
    a = make_diagonal_unstable_form(QQ, [1])
    b = make_diagonal_unstable_form(quad_algebra(), [1])
    with pytest.raises(FieldMismatchError):
        add_gwu(a, b)


def test_iso_is_strict_on_the_scalar():
    a = make_gwu([[1]], field=QQ)
    b = make_gwu([[4]], field=QQ)
    # the forms are isomorphic but the scalars 1 and 4 are different
    assert not is_isomorphic_gwu(a, b)
    c = make_gwu([[4]], 1, field=QQ)
    assert is_isomorphic_gwu(a, c)


def test_iso_of_worked_example():
    alpha1 = make_gwu(make_gw_class(A1_ROWS, field=QQ))
    alpha2 = make_gwu(make_gw_class(A2_ROWS, field=QQ))
    assert alpha1.scalar.as_scalar().value == -18
    assert alpha2.scalar.as_scalar().value == -18
    assert is_isomorphic_gwu(alpha1, alpha2)
    shifted = make_gwu(make_gw_class(A2_ROWS, field=QQ), -2)
    assert not is_isomorphic_gwu(alpha1, shifted)


def test_sum_decomposition_of_worked_example():
    alpha1 = make_gwu(make_gw_class(A1_ROWS, field=QQ))
    dec = get_sum_decomposition_gwu(alpha1)
    m = dec.gw.scalar_matrix()
    assert [[e.value for e in row] for row in m] == [
        [2, 0, 0],
        [0, 1, 0],
        [0, 0, -1],
    ]
    assert dec.scalar.as_scalar().value == -18
    assert is_isomorphic_gwu(alpha1, dec)


# ---------------------------------------------------------------------------
# divisorial addition
# ---------------------------------------------------------------------------


def test_divisorial_twist():
    a = make_diagonal_unstable_form(QQ, [2])
    b = make_diagonal_unstable_form(QQ, [3])
    s = add_gwu_divisorial([a, b], [0, 3])
    assert s.rank == 2
    # 2 * 3 * (0 - 3)^2
    assert s.scalar.as_scalar().value == 54
    assert s.compatibility == CHECKED


def test_divisorial_twist_counts_ranks():
    a = make_diagonal_unstable_form(QQ, [1, 1])
    b = make_diagonal_unstable_form(QQ, [1])
    s = add_gwu_divisorial([a, b], [1, -1])
    # twist (1 - (-1))^(2*2*1) = 2^4
    assert s.scalar.as_scalar().value == 16


def test_divisorial_validation():
    a = make_diagonal_unstable_form(QQ, [1])
    with pytest.raises(MathDomainError):
        add_gwu_divisorial([], [])
    with pytest.raises(MathDomainError):
        add_gwu_divisorial([a], [1, 2])
    with pytest.raises(MathDomainError):
        add_gwu_divisorial([a, a], [2, 2])
    b = make_diagonal_unstable_form(quad_algebra(), [1])
    with pytest.raises(FieldMismatchError):
        add_gwu_divisorial([a, b], [0, 1])


def test_divisorial_single_class_is_identity():
    a = make_diagonal_unstable_form(QQ, [7])
    s = add_gwu_divisorial([a], [5])
    assert s == a
