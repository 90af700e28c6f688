from hypothesis import given, settings, strategies as st

from genus2split.algebra import PrimeField
from genus2split.finite_field import GF, ExtensionField, is_irreducible, poly_roots, quadratic_roots
from genus2split.poly import UniPoly

P = 10007


def test_gf_structure():
    assert GF(P, 1) == PrimeField(P)
    K = GF(P, 3)
    assert isinstance(K, ExtensionField) and K.order == P ** 3
    assert is_irreducible(K.modulus)
    x = K.element([2, 3, 5])
    assert x ** K.order == x
    assert K.frobenius(x, 3) == x


def test_irreducibility():
    F = PrimeField(7)
    assert is_irreducible(UniPoly(F, [1, 0, 1]))  # -1 is not a square mod 7
    assert not is_irreducible(UniPoly(F, [-1, 0, 1]))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(0, P - 1), min_size=1, max_size=5, unique=True), st.integers(1, P - 1))
def test_poly_roots_of_split_polynomials(roots, lc):
    F = PrimeField(P)
    f = UniPoly(F, [lc])
    for r in roots:
        f = f * UniPoly(F, [-r, 1])
    found = poly_roots(f)
    assert sorted(int(x) for x in found) == sorted(roots)


def test_poly_roots_in_extension():
    K = GF(P, 2)
    f = UniPoly(K, [1, 0, 1])  # P = 3 mod 4: i lies in F_{p^2} only
    assert poly_roots(UniPoly(PrimeField(P), [1, 0, 1])) == []
    roots = poly_roots(f)
    assert len(roots) == 2 and all(r * r == -1 for r in roots)


def test_extension_sqrt():
    K = GF(P, 2)
    for k in range(1, 30):
        x = K.element([k, 2 * k + 1])
        if K.is_square(x):
            assert K.sqrt(x) ** 2 == x
    # every element of F_p is a square in F_{p^2}
    assert K.is_square(K.element([5, 0]))


def test_quadratic_roots():
    F = PrimeField(P)
    assert quadratic_roots(UniPoly(F, [6, -5, 1])) == [F(2), F(3)]
