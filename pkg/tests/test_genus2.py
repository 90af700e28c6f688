from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genus2split.algebra import QQ, PrimeField, SeededSampler
from genus2split.finite_field import GF, poly_roots
from genus2split.genus2 import (
    HyperellipticModel,
    IgusaInvariants,
    SingularCurveError,
    absolute_invariants,
    igusa_invariants,
    is_geometrically_isomorphic,
    split22_model,
    weighted_projective_equal,
)
from genus2split.poly import UniPoly

from oracles import igusa_from_roots, poly_from_roots

P = 10007


def test_x6_plus_1_over_Q():
    inv = igusa_invariants(HyperellipticModel.from_coeffs(QQ, [1, 0, 0, 0, 0, 0, 1]))
    assert inv == (-240, 1620, -119880, -46656)


def test_x6_plus_1_mod_10007_against_root_oracle():
    # X^6 + 1 splits over F_{p^2} since 12 | p^2 - 1
    K = GF(P, 2)
    f = UniPoly(K, [1, 0, 0, 0, 0, 0, 1])
    roots = poly_roots(f)
    assert len(roots) == 6
    oracle = igusa_from_roots(K.one, roots)
    F = PrimeField(P)
    inv = igusa_invariants(HyperellipticModel.from_coeffs(F, [1, 0, 0, 0, 0, 0, 1]))
    for ours, theirs in zip(inv, oracle):
        assert theirs.is_scalar() and ours == theirs.scalar()


def test_split_roots_against_oracle():
    F = PrimeField(P)
    sampler = SeededSampler(11)
    for trial in range(10):
        roots = [F(sampler.integer(trial, P, k)) for k in range(6)]
        lc = F(sampler.integer(trial, P, 7)) + 1
        if len(set(roots)) < 6:
            continue
        f = UniPoly(F, poly_from_roots(lc, roots, F.zero, F.one))
        assert tuple(igusa_invariants(f)) == igusa_from_roots(lc, roots)


def test_quintic_matches_root_oracle_with_root_at_infinity():
    # f of degree 5 is the sextic with a root at infinity; move it to 0 by X -> 1/X
    F = PrimeField(P)
    roots = [F(v) for v in (1, 2, 3, 4, 5)]
    f = UniPoly(F, poly_from_roots(F(7), roots, F.zero, F.one))
    g = f.reversed(6)  # X^6 f(1/X): roots 1/r and 0
    assert g.degree == 6
    inv_f, inv_g = igusa_invariants(f), igusa_invariants(g)
    assert weighted_projective_equal(inv_f, inv_g)
    assert tuple(inv_g) == igusa_from_roots(g.lc, [1 / r for r in roots] + [F.zero])


sextic = st.lists(st.integers(-5, 5), min_size=7, max_size=7).filter(lambda c: c[6] != 0)


@settings(max_examples=25, deadline=None)
@given(sextic, st.integers(-4, 4), st.integers(1, 5))
def test_translation_and_homogeneity(coeffs, t, lam):
    f = UniPoly(QQ, coeffs)
    try:
        inv = igusa_invariants(HyperellipticModel(f))
    except SingularCurveError:
        return
    assert igusa_invariants(f.translate(t)) == inv
    scaled = igusa_invariants(f * lam)
    assert tuple(scaled) == tuple(lam ** w * x for w, x in zip((2, 4, 6, 10), inv))


def test_absolute_invariants():
    assert absolute_invariants(IgusaInvariants(1, 1, 1, 1)) == (144, 3456, 486)
    inv = IgusaInvariants(Fraction(3), Fraction(5), Fraction(7), Fraction(11))
    lam = Fraction(2, 3)
    scaled = IgusaInvariants(*(lam ** w * x for w, x in zip((2, 4, 6, 10), inv)))
    assert absolute_invariants(scaled) == absolute_invariants(inv)
    f = UniPoly(QQ, [1, 2, 0, -1, 0, 3, 1])
    assert absolute_invariants(igusa_invariants(f)) == absolute_invariants(igusa_invariants(f.translate(1)))
    with pytest.raises(ZeroDivisionError):
        absolute_invariants(IgusaInvariants(0, 1, 1, 1))


def test_geometric_isomorphism():
    f = UniPoly(QQ, [1, 2, 0, -1, 0, 3, 1])
    m = HyperellipticModel(f)
    assert is_geometrically_isomorphic(m, HyperellipticModel(f.translate(3)))
    assert is_geometrically_isomorphic(m, m.twist(Fraction(25, 9)))
    assert is_geometrically_isomorphic(m, m.transform(2, 1, 1, 3))
    F = PrimeField(P)
    a = HyperellipticModel.from_coeffs(F, [1, 0, 0, 0, 0, 0, 1])
    b = HyperellipticModel.from_coeffs(F, [1, 1, 0, 0, 0, 0, 1])
    assert not is_geometrically_isomorphic(a, b)


def test_singular_models_rejected():
    with pytest.raises(SingularCurveError):
        HyperellipticModel(UniPoly(QQ, [1, -2, 1, 0, 1, -2, 1]))
    with pytest.raises(SingularCurveError):
        HyperellipticModel(UniPoly(QQ, [1, 0, 0, 0, 1]))


def test_split22_model():
    s = split22_model(-36, 49, -14, 1, QQ)
    assert s.psi1(Fraction(1), Fraction(0)) == (1, 0)
    assert s.E1(1) == 0
    # generic check mod p: psi1 and psi2 land on E1 and E2
    F = PrimeField(P)
    s = split22_model(F(3), F(5), F(7), F(11), F)
    sampler = SeededSampler(2)
    hits = 0
    for i in range(400):
        x = F(sampler.integer(i, P))
        fx = s.C2.f(x)
        if x == 0 or not F.is_square(fx):
            continue
        y = F.sqrt(fx)
        u, v = s.psi1(x, y)
        assert v * v == s.E1(u)
        w, z = s.psi2(x, y)
        assert z * z == s.E2(w)
        hits += 1
        if hits == 50:
            break
    assert hits == 50
