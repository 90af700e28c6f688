from fractions import Fraction

import pytest

from genus2split.algebra import QQ, PrimeField, SeededSampler
from genus2split.etale import QuotientRing
from genus2split.family import (
    DegenerateParametersError,
    FamilyParams,
    PAIRINGS,
    c4_via_richelot,
    check_roots_w,
    condition_values,
    curve_C2,
    curve_C4,
    curve_E2,
    degeneracy_flags,
    derive_params,
    family_splitting,
    has_involution,
    kappe_warren,
    limit_curve,
    q2,
    roots_w,
)
from genus2split.genus2 import is_geometrically_isomorphic, sextic_discriminant
from genus2split.poly import UniPoly, discriminant
from genus2split.richelot import enumerate_splittings

P = 10007


def _random_params(field, seed, n):
    sampler = SeededSampler(seed)
    out, i = [], 0
    while len(out) < n:
        p = FamilyParams(*(field(sampler.integer(i, field.p, k)) for k in range(3)), field)
        i += 1
        if not degeneracy_flags(p):
            out.append(p)
    return out


def test_derive_params_at_011():
    dp = derive_params(FamilyParams(0, 1, 1))
    assert dp.a == Fraction(-7, 8)
    assert (dp.t0, dp.t1, dp.t2) == (Fraction(-5, 8), Fraction(1, 4), Fraction(-3, 4))
    assert dp.d == 54 and dp.D == -27
    A = QuotientRing(QQ, UniPoly(QQ, [1, 0, 0, 1]))
    r = A.gen()
    t = dp.t2 * r * r + dp.t1 * r + dp.t0
    assert t * t == r * r + dp.a * r + dp.a ** 2


def test_derive_params_at_s_zero():
    for b, c in [(1, 2), (-3, 5), (Fraction(2, 3), 7)]:
        assert derive_params(FamilyParams(b, c, 0)).a == Fraction(b) ** 2 / (4 * Fraction(c))


def test_curve_C2_at_011():
    f = curve_C2(FamilyParams(0, 1, 1)).f
    assert f.lc == Fraction(1, 157464)
    assert f[0] == Fraction(169, 512)
    assert all(f[i] == 0 for i in (1, 3, 5))


def test_curve_E2():
    q = curve_E2(FamilyParams(0, 1, 1))
    assert q.degree == 4 and q.lc == 54
    p = FamilyParams(1, 1, 1)
    q = curve_E2(p)
    assert (q % p.cubic()).is_zero()
    assert discriminant(q) != 0


def test_curve_C4():
    F, form = curve_C4(FamilyParams(1, 1, 1))
    assert F.f.lc == Fraction(141, 29791)
    assert sextic_discriminant(F.f) == Fraction(2 ** 9 * 3 ** 22, 31 ** 14)
    G, _ = curve_C4(FamilyParams(0, 1, 1))
    assert G.f.degree == 5


def test_degeneracy_flags():
    assert 1 in degeneracy_flags(FamilyParams(-3, 2, 5))
    assert degeneracy_flags(FamilyParams(-3, 2, 5)) == {1}
    p = FamilyParams(0, 1, 1)
    assert condition_values(p) == (27, 9, 2, 13)
    assert degeneracy_flags(p) == frozenset()
    # s^3 = 1/2 has a root in F_p for p = 2 mod 3
    F = PrimeField(P)
    s = (F.one / 2) ** ((2 * P - 1) // 3)
    assert s ** 3 == F.one / 2
    assert degeneracy_flags(FamilyParams(0, 1, s, F)) == {2}


def test_degenerate_parameters_raise():
    with pytest.raises(DegenerateParametersError) as err:
        curve_C4(FamilyParams(-3, 2, 5))
    assert err.value.conditions == {1}


def test_limit_curve():
    m = limit_curve(1, 1)
    assert m.f.lc == Fraction(64, 29791)
    for b, c in [(1, 1), (2, -3), (Fraction(1, 2), 5)]:
        b, c = Fraction(b), Fraction(c)
        D = -4 * b ** 3 - 27 * c ** 2
        assert has_involution(limit_curve(b, c), D / 4)
    with pytest.raises(ValueError):
        limit_curve(0, 1)


def test_roots_w_at_111():
    p = FamilyParams(1, 1, 1)
    tower, w = roots_w(p)
    assert sum(w, tower.zero) == 0
    assert check_roots_w(p)
    assert w[2] == tower.sigma(w[0])


def test_roots_w_random_mod_p():
    for p in _random_params(PrimeField(P), 1, 20):
        assert check_roots_w(p)


def test_printed_table_coefficient_is_rejected():
    from genus2split.family import _w_table

    def misprint(b, c, s):
        w1_R, w3_R, w3_1 = _w_table(b, c, s)
        return w1_R, w3_R, (-3 * b * s - 9 * c,) + w3_1[1:]

    assert not check_roots_w(FamilyParams(1, 1, 1), misprint)


def test_rational_splittings_at_111():
    p = FamilyParams(1, 1, 1)
    tower, w = roots_w(p)
    splits = enumerate_splittings(w, q2(p), tower)
    assert len(splits) == 15
    rational = {s.pairing for s in splits if s.rational}
    assert rational == set(PAIRINGS.values())
    singular = [s for s in splits if s.singular]
    assert [s.pairing for s in singular] == [PAIRINGS["singular"]]


def test_family_splitting_multiplies_to_g():
    p = FamilyParams(2, 3, 5)
    g = curve_C2(p).f
    for which in PAIRINGS:
        F1, F2, F3 = family_splitting(p, which)
        prod = F1 * F2 * F3
        assert all(c.is_scalar() for c in prod.coeffs)
        assert UniPoly(QQ, [c.scalar() for c in prod.coeffs]) == g


def test_c4_via_richelot_at_111():
    p = FamilyParams(1, 1, 1)
    ours = c4_via_richelot(p)
    theirs, _ = curve_C4(p)
    assert is_geometrically_isomorphic(ours, theirs)
    r2 = c4_via_richelot(p, "R2")
    assert r2.f == ours.f.reflect()


def test_c4_via_richelot_random_mod_p():
    for p in _random_params(PrimeField(P), 2, 20):
        assert is_geometrically_isomorphic(c4_via_richelot(p), curve_C4(p)[0])


def test_kappe_warren():
    assert kappe_warren(-5, 4) == ("reducible", 1)
    assert kappe_warren(0, 1) == ("irreducible", None)
    assert kappe_warren(0, -1) == ("reducible", 1)
    # X^4 + 4X^2 + 16 = (X^2 + 2X + 4)(X^2 - 2X + 4): D = 4^2 and -B + 2*4 = 2^2
    assert kappe_warren(4, 16) == ("reducible", 2)


def test_kappe_warren_against_factorization_mod_p():
    from genus2split.finite_field import is_irreducible

    F = PrimeField(101)
    for B in range(0, 101, 7):
        for D in range(1, 101, 11):
            quartic = UniPoly(F, [D, 0, B, 0, 1])
            if discriminant(quartic) == 0:
                continue
            verdict, _ = kappe_warren(B, D, F)
            assert (verdict == "irreducible") == is_irreducible(quartic)


def test_scaled_params_preserve_invariants():
    from genus2split.genus2 import absolute_invariants, igusa_invariants

    p = FamilyParams(2, 3, 5)
    inv = absolute_invariants(igusa_invariants(curve_C4(p)[0]))
    assert absolute_invariants(igusa_invariants(curve_C4(p.scaled(Fraction(3, 2)))[0])) == inv
