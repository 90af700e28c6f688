"""Finite fields F_{p^n} and root finding over finite fields.

F_{p^n} is F_p[T]/(m) for a deterministic irreducible m.  Root finding is
Cantor-Zassenhaus: the distinct-root part gcd(f, X^q - X) is split with
random gcds against (X + a)^((q-1)/2) - 1.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import PrimeField, SeededSampler
from .etale import QuotientRing, Residue
from .poly import UniPoly

__all__ = [
    "ExtensionField",
    "GF",
    "frobenius",
    "is_irreducible",
    "poly_powmod",
    "poly_roots",
    "quadratic_roots",
]


def poly_powmod(base: UniPoly, e: int, mod: UniPoly) -> UniPoly:
    result = UniPoly(base.ring, [1])
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's test over F_q: f | X^(q^n) - X and gcd(X^(q^(n/l)) - X, f) = 1."""
    n = f.degree
    if n < 1:
        return False
    q = field_order(f.ring)
    X = UniPoly.x(f.ring)
    f = f.monic()
    for l in _prime_factors(n):
        h = poly_powmod(X, q ** (n // l), f)
        if (h - X).gcd(f).degree > 0:
            return False
    return poly_powmod(X, q ** n, f) == X % f


def field_order(field) -> int:
    return field.order


class ExtensionField(QuotientRing):
    """F_{p^n} = F_p[T]/(m) for a fixed irreducible monic m of degree n."""

    def __init__(self, p: int, n: int, modulus: UniPoly | None = None):
        self._z = None
        base = PrimeField(p)
        if modulus is None:
            modulus = _find_irreducible(base, n)
        elif not is_irreducible(modulus):
            raise ValueError("modulus is not irreducible")
        super().__init__(base, modulus)
        self.p = p
        self.degree = n
        self.order = p ** n

    def is_square(self, x) -> bool:
        x = self(x)
        return not x or x ** ((self.order - 1) // 2) == self.one

    def sqrt(self, x) -> Residue:
        """Tonelli-Shanks in F_q; raises ValueError on non-squares."""
        x = self(x)
        if not x:
            return self.zero
        if not self.is_square(x):
            raise ValueError("not a square")
        q, e = self.order - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = self._nonresidue()
        m, c, t, root = e, z ** q, x ** q, x ** ((q + 1) // 2)
        while t != self.one:
            i, t2 = 0, t
            while t2 != self.one:
                t2 = t2 * t2
                i += 1
            bb = c ** (1 << (m - i - 1))
            m, c = i, bb * bb
            t, root = t * c, root * bb
        return root

    def _nonresidue(self) -> Residue:
        if getattr(self, "_z", None) is None:
            sampler = SeededSampler(self.p)
            i = 0
            while True:
                z = _random_element(self, sampler, i)
                i += 1
                if z and not self.is_square(z):
                    self._z = z
                    break
        return self._z

    def frobenius(self, x, k: int = 1) -> Residue:
        return self(x) ** (self.p ** k)

    def element(self, coeffs) -> Residue:
        return self(list(coeffs))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


def _find_irreducible(base: PrimeField, n: int) -> UniPoly:
    sampler = SeededSampler(base.p)
    i = 0
    while True:
        coeffs = [sampler.integer(i, base.p, stream=j) for j in range(n)] + [1]
        i += 1
        f = UniPoly(base, coeffs)
        if f[0] != 0 and is_irreducible(f):
            return f


@lru_cache(maxsize=None)
def GF(p: int, n: int = 1):
    """The cached field F_{p^n} (a PrimeField when n = 1)."""
    return PrimeField(p) if n == 1 else ExtensionField(p, n)


def frobenius(x, p: int):
    """x -> x^p for elements of F_p or an extension."""
    return x ** p


def _random_element(field, sampler: SeededSampler, index: int):
    if isinstance(field, PrimeField):
        return field(sampler.integer(index, field.p))
    return field.element([sampler.integer(index, field.p, stream=j) for j in range(field.degree)])


def quadratic_roots(f: UniPoly) -> list:
    """Roots of a polynomial of degree <= 2 by the quadratic formula."""
    field = f.ring
    if f.degree < 1:
        return []
    if f.degree == 1:
        return [-f[0] / f[1]]
    a, b, c = f[2], f[1], f[0]
    disc = b * b - a * c * 4
    if not field.is_square(disc):
        return []
    r = field.sqrt(disc)
    roots = {(-b + r) / (a * 2), (-b - r) / (a * 2)}
    return sorted(roots, key=_sort_key)


def poly_roots(f: UniPoly, seed: int = 0) -> list:
    """Distinct roots of f in its (finite) coefficient field, in a canonical order."""
    field = f.ring
    if f.degree < 1:
        return []
    if f.degree <= 2:
        return quadratic_roots(f)
    q = field_order(field)
    f = f.monic()
    X = UniPoly.x(field)
    g = (poly_powmod(X, q, f) - X).gcd(f)
    if g.is_zero():
        g = f
    sampler = SeededSampler(seed)
    roots = []
    stack = [g.monic()]
    counter = 0
    while stack:
        h = stack.pop()
        if h.degree == 0:
            continue
        if h.degree == 1:
            roots.append(-h[0] / h[1])
            continue
        while True:
            a = _random_element(field, sampler, counter)
            counter += 1
            t = poly_powmod(X + a, (q - 1) // 2, h) - 1
            d = t.gcd(h)
            if 0 < d.degree < h.degree:
                stack.append(d.monic())
                stack.append((h // d).monic())
                break
    return sorted(roots, key=_sort_key)


def _sort_key(x):
    if isinstance(x, Residue):
        return tuple(int(a) for a in x.c)
    return (int(x),)
