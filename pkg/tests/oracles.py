"""Independent reference implementations used only by the tests.

Each oracle takes a different route from the package code: invariants from
explicit root differences, resultants from a Sylvester determinant, norms
from multiplication-matrix determinants, nullspaces from textbook
Gauss-Jordan elimination on Python ints.
"""

from fractions import Fraction
from functools import lru_cache
import itertools


# -- Igusa invariants from roots ----------------------------------------------------

_GRAPHS = {
    2: [(0, 1), (2, 3), (4, 5)],
    4: [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
    6: [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
}


@lru_cache(maxsize=None)
def _orbit(degree):
    edges = _GRAPHS[degree]
    seen = set()
    for perm in itertools.permutations(range(6)):
        seen.add(frozenset(frozenset((perm[a], perm[b])) for a, b in edges))
    return [[tuple(e) for e in g] for g in seen]


def igusa_from_roots(lc, roots):
    """(I2, I4, I6, I10) as orbit sums of squared root differences."""
    assert len(roots) == 6
    diff = {(i, j): (roots[i] - roots[j]) ** 2 for i in range(6) for j in range(6) if i != j}
    out = []
    for degree in (2, 4, 6):
        total = None
        for graph in _orbit(degree):
            term = None
            for i, j in graph:
                term = diff[i, j] if term is None else term * diff[i, j]
            total = term if total is None else total + term
        out.append(lc ** degree * total)
    disc = None
    for i, j in itertools.combinations(range(6), 2):
        disc = diff[i, j] if disc is None else disc * diff[i, j]
    out.append(lc ** 10 * disc)
    return tuple(out)


def poly_from_roots(lc, roots, zero, one):
    """Ascending coefficients of lc * prod (X - r)."""
    poly = [lc]
    for r in roots:
        nxt = [zero] * (len(poly) + 1)
        for k, a in enumerate(poly):
            nxt[k] = nxt[k] - r * a
            nxt[k + 1] = nxt[k + 1] + a
        poly = nxt
    return poly


# -- determinants, resultants, norms ----------------------------------------------


def det_fraction(rows):
    """Determinant over Q by Gauss elimination on Fractions."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            m = a[i][col] / a[col][col]
            a[i] = [x - m * y for x, y in zip(a[i], a[col])]
    return det


def det_mod_p(rows, p):
    a = [[x % p for x in r] for r in rows]
    n = len(a)
    det = 1
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col] % p
        inv = pow(a[col][col], -1, p)
        for i in range(col + 1, n):
            m = a[i][col] * inv % p
            a[i] = [(x - m * y) % p for x, y in zip(a[i], a[col])]
    return det % p


def sylvester_resultant(f, g):
    """Res(f, g) for ascending integer/Fraction coefficient lists."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(f)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(g)) + [0] * (size - n - 1 - i))
    return det_fraction(rows)


def multiplication_matrix(a, h):
    """Matrix of x -> a*x on Q[T]/(h), h monic ascending, a ascending (len <= deg h)."""
    n = len(h) - 1
    cols = []
    for k in range(n):
        prod = [Fraction(0)] * (len(a) + k)
        for i, c in enumerate(a):
            prod[i + k] += Fraction(c)
        for top in range(len(prod) - 1, n - 1, -1):
            c = prod[top]
            if c:
                for j in range(n + 1):
                    prod[top - n + j] -= c * h[j]
        cols.append((prod + [Fraction(0)] * n)[:n])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def norm_by_matrix(a, h):
    return det_fraction(multiplication_matrix(a, h))


# -- linear algebra ------------------------------------------------------------------


def nullspace_gauss(rows, p):
    """Reduced basis of the right nullspace mod p, one vector per free column."""
    a = [[x % p for x in r] for r in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][col], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                m = a[i][col]
                a[i] = [(x - m * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-a[row][fcol]) % p
        basis.append(v)
    return basis


def weighted_monomials(max_weight):
    """Brute-force enumeration of (e1, e2, e3) with 2e1+3e2+5e3 <= max_weight."""
    out = []
    for e in itertools.product(range(max_weight // 2 + 1), repeat=3):
        if 2 * e[0] + 3 * e[1] + 5 * e[2] <= max_weight:
            out.append(e)
    return sorted(out)
