from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from genus2split.algebra import (
    QQ,
    PrimeField,
    SeededSampler,
    crt_combine,
    field_from_json,
    is_probable_prime,
    rational_reconstruct,
    sample_scalar,
    scalar_from_str,
    scalar_to_str,
)

P = 10007


def test_crt_examples():
    assert crt_combine([(1, 3), (2, 5)]) == (7, 15)
    assert crt_combine([(0, 3), (0, 5)]) == (0, 15)
    assert crt_combine([(2, 3)]) == (2, 3)


def test_crt_rejects_non_coprime():
    with pytest.raises(ValueError, match="not coprime"):
        crt_combine([(1, 6), (2, 9)])


@given(st.integers(0, 10 ** 12), st.lists(st.sampled_from([101, 103, 107, 109, 113, 127]), min_size=1, unique=True))
def test_crt_roundtrip(x, moduli):
    value, modulus = crt_combine([(x % m, m) for m in moduli])
    assert modulus == math.prod(moduli)
    assert value == x % modulus


def test_rational_reconstruct_examples():
    assert rational_reconstruct(65, 97) == Fraction(1, 3)
    assert rational_reconstruct(0, 97) == Fraction(0)
    assert rational_reconstruct(5, 97) == Fraction(5)


@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_rational_reconstruct_recovers_small_fractions(n, d):
    m = 1000003 * 1000033
    q = Fraction(n, d)
    value = q.numerator * pow(q.denominator, -1, m) % m
    assert rational_reconstruct(value, m) == q


def test_rational_reconstruct_fails_above_bound():
    m = 1000003
    q = Fraction(123456789, 987654321)
    value = q.numerator * pow(q.denominator, -1, m) % m
    assert rational_reconstruct(value, m) != q


def test_sampler_determinism_and_seed_sensitivity():
    a = sample_scalar(SeededSampler(1), 0, P)
    assert a == sample_scalar(SeededSampler(1), 0, P)
    draws1 = [sample_scalar(SeededSampler(1), i, P) for i in range(20)]
    draws2 = [sample_scalar(SeededSampler(2), i, P) for i in range(20)]
    assert draws1 != draws2


def test_sampler_uniformity_mod_101():
    sampler = SeededSampler(0)
    counts = [0] * 101
    n = 10 ** 4
    for i in range(n):
        counts[int(sample_scalar(sampler, i, 101))] += 1
    expected = n / 101
    sigma = math.sqrt(expected * (1 - 1 / 101))
    assert all(abs(c - expected) <= 5 * sigma for c in counts)
    chi2 = sum((c - expected) ** 2 / expected for c in counts)
    assert chi2 < 100 + 5 * math.sqrt(200)


def test_streams_are_independent():
    s = SeededSampler(5)
    assert [s.integer(i, 2 ** 64, 0) for i in range(5)] != [s.integer(i, 2 ** 64, 1) for i in range(5)]


@given(st.integers(0, P - 1), st.integers(0, P - 1), st.integers(1, P - 1))
def test_prime_field_axioms(a, b, c):
    F = PrimeField(P)
    x, y, z = F(a), F(b), F(c)
    assert x * (y + z) == x * y + x * z
    assert z * (1 / z) == 1
    assert (x - y) + y == x
    assert x ** P == x


def test_prime_field_sqrt():
    F = PrimeField(P)
    for v in range(1, 200):
        x = F(v)
        if F.is_square(x):
            assert F.sqrt(x) ** 2 == x


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(10001)


def test_is_probable_prime():
    assert is_probable_prime(999983)
    assert not is_probable_prime(999981)
    assert not is_probable_prime(561)


def test_rational_sqrt_and_strings():
    assert QQ.is_square(Fraction(49, 64))
    assert QQ.sqrt(Fraction(49, 64)) == Fraction(7, 8)
    assert not QQ.is_square(Fraction(-4))
    assert scalar_from_str("-7/8") == Fraction(-7, 8)
    assert scalar_to_str(Fraction(-7, 8)) == "-7/8"
    assert field_from_json({"kind": "Fp", "p": "101"}) == PrimeField(101)
    assert field_from_json({"kind": "Q"}) is QQ
