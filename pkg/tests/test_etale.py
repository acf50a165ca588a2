import random
from fractions import Fraction

import pytest

from gwdeg.errors import FieldMismatchError, MathDomainError
from gwdeg.etale import (
    EtaleAlgebra,
    as_algebra,
    is_unit,
    make_etale_algebra,
    multiplication_matrix,
    trace,
    trace_form,
)
from gwdeg.fields import GF, QQ, Scalar
from gwdeg.poly import Polynomial


def x_poly(field=QQ):
    return Polynomial.variable(field)


# ---------------------------------------------------------------------------
# algebra construction
# ---------------------------------------------------------------------------


def test_factor_validation():
    x = x_poly()
    with pytest.raises(MathDomainError):
        make_etale_algebra(QQ, [2 * x - 1])  # not monic
    with pytest.raises(MathDomainError):
        make_etale_algebra(QQ, [Polynomial(QQ, [3])])  # constant factor
    with pytest.raises(MathDomainError):
        make_etale_algebra(QQ, [x**2])  # repeated root
    with pytest.raises(MathDomainError):
        make_etale_algebra(QQ, [x**2 - 2 * x + 1])  # (x-1)^2
    with pytest.raises(FieldMismatchError):
        make_etale_algebra(QQ, [Polynomial.variable(GF(5))])


def test_shape_predicates():
    x = x_poly()
    trivial = EtaleAlgebra.trivial(QQ)
    assert trivial.is_trivial and trivial.is_field_like and trivial.splits_completely
    quad = make_etale_algebra(QQ, [x**2 - 1])
    assert not quad.is_field_like and not quad.splits_completely
    split = make_etale_algebra(QQ, [x - 1, x + 1])
    assert split.splits_completely and not split.is_field_like
    shifted = make_etale_algebra(QQ, [x - 3])
    assert shifted.is_field_like and not shifted.is_trivial


def test_dimension_and_basis_order():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 2, x - 5])
    assert alg.dimension == 3
    assert alg.basis_index() == ((0, 0), (0, 1), (1, 0))


def test_linear_roots():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x - 1, x + 1])
    assert alg.linear_roots() == [Scalar(QQ, 1), Scalar(QQ, -1)]
    with pytest.raises(MathDomainError):
        make_etale_algebra(QQ, [x**2 - 2]).linear_roots()


def test_as_algebra_wraps_fields():
    assert as_algebra(QQ).is_trivial
    alg = make_etale_algebra(QQ, [x_poly() ** 2 - 1])
    assert as_algebra(alg) is alg


# ---------------------------------------------------------------------------
# element arithmetic
# ---------------------------------------------------------------------------


def test_element_reduction_and_equality():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 1])
    u = alg.coerce(x**3)  # x^3 = x mod x^2-1
    assert u == alg.generator()


def test_component_scalars_on_split_algebra():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x - 1, x + 1])
    u = alg.coerce(x**2 + x)  # evaluates to 2 and 0
    assert u.component_scalars() == [Scalar(QQ, 2), Scalar(QQ, 0)]


def test_as_scalar_requires_field_like():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 1])
    with pytest.raises(MathDomainError):
        alg.one().as_scalar()
    shifted = make_etale_algebra(QQ, [x - 3])
    assert shifted.generator().as_scalar() == 3


def test_inverse_random_units():
    rng = random.Random(7)
    x = x_poly()
    for factors in ([x**2 - 2], [x - 1, x + 1], [x**2 + 1, x - 2]):
        alg = make_etale_algebra(QQ, factors)
        for _ in range(25):
            residues = [
                Polynomial(QQ, [rng.randint(-5, 5) for _ in range(f.degree)])
                for f in alg.factors
            ]
            u = alg.element(residues)
            if not is_unit(u):
                continue
            assert u * u.inverse() == alg.one()


def test_nonunit_inverse_rejected():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x - 1, x + 1])
    u = alg.element([Polynomial.zero(QQ), Polynomial.one(QQ)])
    assert not is_unit(u)
    with pytest.raises(MathDomainError):
        u.inverse()


def test_mixed_algebra_arithmetic_rejected():
    x = x_poly()
    a = make_etale_algebra(QQ, [x**2 - 1])
    b = make_etale_algebra(QQ, [x**2 - 2])
    with pytest.raises(FieldMismatchError):
        a.one() + b.one()


# ---------------------------------------------------------------------------
# multiplication matrices and traces
# ---------------------------------------------------------------------------


def test_multiplication_matrix_of_generator():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 1])
    m = multiplication_matrix(alg.generator())
    assert [[e.value for e in row] for row in m] == [[0, 1], [1, 0]]
    alg2 = make_etale_algebra(QQ, [x**2 - 2])
    m2 = multiplication_matrix(alg2.generator())
    assert [[e.value for e in row] for row in m2] == [[0, 2], [1, 0]]


def test_multiplication_matrix_is_multiplicative():
    rng = random.Random(29)
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 2, x - 1])
    for _ in range(20):
        u = alg.element(
            [
                Polynomial(QQ, [rng.randint(-4, 4) for _ in range(f.degree)])
                for f in alg.factors
            ]
        )
        v = alg.element(
            [
                Polynomial(QQ, [rng.randint(-4, 4) for _ in range(f.degree)])
                for f in alg.factors
            ]
        )
        mu = multiplication_matrix(u)
        mv = multiplication_matrix(v)
        muv = multiplication_matrix(u * v)
        n = alg.dimension
        product = [
            [
                sum((mu[i][k] * mv[k][j] for k in range(n)), Scalar(QQ, 0))
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert [list(r) for r in muv] == product


def test_trace_values_on_quadratic():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 - 1])
    assert trace(alg.generator()) == 0
    assert trace(alg.one()) == 2


def test_trace_equals_sum_over_roots_on_split_algebras():
    rng = random.Random(31)
    x = x_poly()
    roots = [-2, 0, 3]
    alg = make_etale_algebra(QQ, [x - r for r in roots])
    for _ in range(25):
        poly = Polynomial(QQ, [rng.randint(-6, 6) for _ in range(4)])
        u = alg.coerce(poly)
        expected = sum(
            (poly.evaluate(Scalar(QQ, r)) for r in roots), Scalar(QQ, 0)
        )
        assert trace(u) == expected


def test_trace_linear():
    x = x_poly()
    alg = make_etale_algebra(QQ, [x**2 + 1])
    u = alg.coerce(x + 2)
    v = alg.coerce(3 * x - 1)
    assert trace(u + v) == trace(u) + trace(v)
    assert trace(alg.coerce(Fraction(5, 2)) * u) == Scalar(QQ, Fraction(5, 2)) * trace(u)


def test_trace_form_of_quadratic_quotient():
    x = x_poly()
    c = trace_form(make_etale_algebra(QQ, [x**2 - 1]))
    assert [[e.value for e in row] for row in c.scalar_matrix()] == [[2, 0], [0, 2]]


def test_trace_form_over_bare_field():
    c = trace_form(QQ)
    assert c.rank == 1
    assert c.scalar_matrix()[0][0].value == 1


def test_trace_form_over_prime_field():
    x = Polynomial.variable(GF(5))
    c = trace_form(make_etale_algebra(GF(5), [x**2 - 2]))
    # diag(2, 2*2) since tr(1)=2, tr(x)=0, tr(x^2)=4
    assert [[e.value for e in row] for row in c.scalar_matrix()] == [[2, 0], [0, 4]]
