from fractions import Fraction

import pytest

from genus2split.algebra import QQ, PrimeField, SeededSampler
from genus2split.family import FamilyParams, curve_C2, splitting_LR1
from genus2split.finite_field import poly_roots
from genus2split.genus2 import HyperellipticModel, is_geometrically_isomorphic
from genus2split.poly import UniPoly, discriminant, is_squarefree
from genus2split.richelot import (
    SingularSplittingError,
    SplittingError,
    TransferDegenerate,
    correspondence_transfer,
    determinant_of,
    dual_quadratics,
    is_frobenius_stable,
    reverse_transfer,
    richelot,
    richelot_dual,
    splitting_determinant,
    splitting_from_json,
    splitting_from_quadratic,
    transfer_context,
)

X = UniPoly.x(QQ)
P = 10007


def _bielliptic():
    f = (X ** 2 - 1) * (X ** 2 - 4) * (X ** 2 - 9)
    h = (X + 1) * (X + 4) * (X + 9)
    return f, h, [[0, 1, 0], [0, 0, 0], [1, 0, 0]]  # Q = X^2 + T


def test_split_bielliptic_splitting_is_valid_and_singular():
    f, h, Q = _bielliptic()
    s = splitting_from_quadratic(Q, h, f)
    assert s.f == f
    det = splitting_determinant(s)
    assert det.is_singular
    with pytest.raises(SingularSplittingError):
        richelot(s)


def test_norm_mismatch_is_rejected():
    f, h, Q = _bielliptic()
    with pytest.raises(SplittingError):
        splitting_from_quadratic(Q, h, f + 1)


def test_json_roundtrip():
    s = splitting_LR1(FamilyParams(1, 1, 1))
    again = splitting_from_json(s.to_json(), s.f)
    assert again.Q == s.Q and again.h == s.h


def test_determinant_examples():
    def rows(*rs):
        return [UniPoly(QQ, r) for r in rs]

    assert determinant_of(*rows((-1, 0, 1), (-4, 0, 1), (-9, 0, 1))) == 0
    assert determinant_of(*rows((0, 0, 1), (0, 1, 1), (1, 1, 1))) == -1
    assert determinant_of(*rows((0, 1, 1), (1, 0, 1), (2, 2, 1))) == 3


def test_dual_quadratics_example_and_identity():
    F = (X ** 2, X ** 2 + X, X ** 2 + X + 1)
    delta = determinant_of(*F)
    assert delta == -1
    G = dual_quadratics(*F, delta)
    assert G[2] == -(X ** 2)
    # sum F_i(x) G_i(z) = -(x - z)^2 at sample points
    for x, z in [(0, 1), (2, 5), (Fraction(1, 3), -4)]:
        total = sum(Fi(Fraction(x)) * Gi(Fraction(z)) for Fi, Gi in zip(F, G))
        assert total == -(Fraction(x) - z) ** 2


def test_split_h_gives_square_twist():
    # h splits over Q: d = disc(h) is a rational square
    h = (X - 1) * (X - 2) * (X - 4)
    Q = [[3, 1, 0], [1, 0, 2], [1, 0, 0]]  # X^2 + (1 + 2T^2) X + 3 + T
    s = splitting_from_quadratic(Q, h)
    image = richelot(s)
    assert QQ.is_square(image.twist)
    assert image.twist == discriminant(h)


def test_family_codomain_is_C4_up_to_square():
    from genus2split.family import curve_C4

    p = FamilyParams(1, 1, 1)
    image = richelot(splitting_LR1(p))
    F, _ = curve_C4(p)
    ratio = image.codomain.f.lc / F.f.lc
    assert image.codomain.f == F.f * ratio
    assert QQ.is_square(ratio)


def _random_splittings(field, seed, n):
    sampler = SeededSampler(seed)
    out, i = [], 0
    while len(out) < n:
        v = [field(sampler.integer(i, field.p, k)) for k in range(9)]
        i += 1
        h = UniPoly(field, [v[0], v[1], v[2], 1])
        if not is_squarefree(h):
            continue
        Q = [[v[3], v[4], v[5]], [v[6], v[7], v[8]], [1, 0, 0]]
        s = splitting_from_quadratic(Q, h)
        if not is_squarefree(s.f) or s.f.degree != 6 or splitting_determinant(s).is_singular:
            continue
        out.append(s)
    return out


def test_duality_random_mod_p():
    for s in _random_splittings(PrimeField(P), 3, 20):
        back = richelot(richelot_dual(s)).codomain
        assert is_geometrically_isomorphic(HyperellipticModel(s.f), back)


# -- point transfer ----------------------------------------------------------------


def _points(f, field, seed, n):
    sampler = SeededSampler(seed)
    out = []
    for i in range(20 * n):
        x = field(sampler.integer(i, field.p))
        v = f(x)
        if v != 0 and field.is_square(v):
            out.append((x, field.sqrt(v)))
            if len(out) == n:
                break
    return out


def test_transfer_random_points_at_111():
    F = PrimeField(P)
    s = splitting_LR1(FamilyParams(1, 1, 1, F))
    ctx = transfer_context(s)
    transferred = 0
    for x, y in _points(s.f, F, 0, 50):
        try:
            images = correspondence_transfer(ctx, x, y)
        except TransferDegenerate:
            continue
        g = ctx.codomain.f.map_coeffs(ctx.K, ctx.K)
        assert all(yt * yt == g(xt) for xt, yt in images)
        # reverse transfer recovers the original point
        for xt, yt in images:
            assert (ctx.K(x), ctx.K(y)) in reverse_transfer(ctx, xt, yt)
        transferred += 1
    assert transferred >= 45


def test_weierstrass_point_transfers_to_y_zero():
    F = PrimeField(P)
    s = splitting_LR1(FamilyParams(1, 1, 1, F))
    ctx = transfer_context(s)
    f = s.f.map_coeffs(ctx.K, ctx.K)
    roots = poly_roots(f)
    assert roots
    F1, F2, F3 = ctx.F
    for w in roots:
        images = correspondence_transfer(ctx, w, ctx.K.zero)
        assert images
        if F1(w) == 0 or F2(w) == 0:
            # the transfer quadratic is a multiple of G2 or G1
            assert all(yt == 0 for _, yt in images)
        else:
            # F3(w) = 0: the quadratic is -(X - w)^2
            assert F3(w) == 0 and all(xt == w for xt, _ in images)


def test_twist_selects_the_rational_model():
    # d a non-residue: only the twisted images are Frobenius-stable
    F = PrimeField(P)
    found = 0
    for s in _random_splittings(F, 7, 60):
        if poly_roots(s.h) and len(poly_roots(s.h)) == 1 and not F.is_square(discriminant(s.h)):
            ctx = transfer_context(s)
            for x, y in _points(s.f, F, 1, 5):
                try:
                    tw = correspondence_transfer(ctx, x, y)
                    naive = correspondence_transfer(ctx, x, y, twisted=False)
                except TransferDegenerate:
                    continue
                assert is_frobenius_stable(tw, P)
                assert not is_frobenius_stable(naive, P)
            found += 1
            if found == 3:
                break
    assert found == 3
