from fractions import Fraction

from hypothesis import given, settings, strategies as st

from genus2split.multipoly import (
    IDENTITY_PRIMES,
    MPoly,
    RationalFunctionField,
    check_identity,
    schwartz_zippel_failure_bound,
)


def test_mpoly_arithmetic():
    x, y = MPoly.gens(2)
    f = (x + y) ** 2
    assert f == x * x + 2 * x * y + y * y
    assert f.total_degree() == 2 and f.degree_in(0) == 2
    assert f(Fraction(1), Fraction(2)) == 9
    assert (f - f).is_zero()
    assert MPoly.from_json(2, f.to_json()) == f


def test_reduce_monic():
    r, b = MPoly.gens(2)
    # r^3 = -b r - 1
    rel = [MPoly.constant(2, 1), b, MPoly(2)]
    assert (r ** 3).reduce_monic(0, rel) == -b * r - 1


@settings(max_examples=30)
@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_ratfunc_field_laws(u, v):
    F = RationalFunctionField(2)
    x, y = F.gens()
    a = x * u[0] + y * u[1] + u[2]
    b = x * v[0] - y * v[1] + v[2] + x * y
    assert a / b * b == a
    assert (a + b) * (a - b) == a * a - b * b
    assert a / b + 1 == (a + b) / b


def test_check_identity():
    def true_identity(field, pt):
        x, y = pt
        return (x + y) ** 2 - x * x - 2 * x * y - y * y

    def false_identity(field, pt):
        x, y = pt
        return (x + y) ** 2 - x * x - y * y

    assert check_identity(true_identity, 2)
    assert not check_identity(false_identity, 2)


def test_failure_bound():
    bound = schwartz_zippel_failure_bound(100, IDENTITY_PRIMES[:5])
    assert bound < 2 ** -40
    assert schwartz_zippel_failure_bound(10 ** 9, [101]) == 1.0
