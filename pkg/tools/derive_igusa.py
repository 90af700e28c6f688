"""Derive coefficient formulas for the root-difference invariants of a sextic.

For f = f6 * prod(X - w_i) the invariants are orbit sums under S6:

    I2 = f6^2  * sum over 15 perfect matchings     of prod (w_i - w_j)^2
    I4 = f6^4  * sum over 10 splittings into two triangles
    I6 = f6^6  * sum over 60 triangular prisms
    I10 = f6^10 * prod_{i<j} (w_i - w_j)^2

Each is written as a combination of monomials f0^e0 ... f6^e6 of degree d
and isobaric weight 3d; the coefficients are fitted exactly over Q at random
integer roots.  Prints the table used by genus2split.genus2.

Usage: python tools/derive_igusa.py
"""

import itertools
import random
from fractions import Fraction

SEED_GRAPHS = {
    2: [(0, 1), (2, 3), (4, 5)],
    4: [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
    6: [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
}


def orbit(edges):
    seen = set()
    for perm in itertools.permutations(range(6)):
        seen.add(frozenset(frozenset((perm[a], perm[b])) for a, b in edges))
    return [tuple(tuple(sorted(e)) for e in g) for g in seen]


def root_invariant(degree, lc, roots):
    total = Fraction(0)
    for graph in orbit(SEED_GRAPHS[degree]):
        term = Fraction(1)
        for i, j in graph:
            term *= (roots[i] - roots[j]) ** 2
        total += term
    return lc ** degree * total


def coefficients(lc, roots):
    poly = [Fraction(lc)]
    for w in roots:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for k, a in enumerate(poly):
            nxt[k] += -w * a
            nxt[k + 1] += a
        poly = nxt
    return poly


def monomials(degree):
    out = []
    for exps in itertools.product(range(degree + 1), repeat=7):
        if sum(exps) == degree and sum(i * e for i, e in enumerate(exps)) == 3 * degree:
            out.append(exps)
    return sorted(out)


def solve(rows, rhs):
    n = len(rows[0])
    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            raise RuntimeError("underdetermined")
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                m = a[i][col]
                a[i] = [x - m * y for x, y in zip(a[i], a[rank])]
        rank += 1
    for row in a[rank:]:
        if row[-1] != 0:
            raise RuntimeError("inconsistent: not an invariant of this shape")
    return [a[i][n] for i in range(n)]


def derive(degree, rng):
    monos = monomials(degree)
    rows, rhs = [], []
    for _ in range(len(monos) + 10):
        roots = [Fraction(rng.randint(-30, 30)) for _ in range(6)]
        lc = Fraction(rng.randint(1, 9))
        f = coefficients(lc, roots)
        row = []
        for exps in monos:
            v = Fraction(1)
            for c, e in zip(f, exps):
                v *= c ** e
            row.append(v)
        rows.append(row)
        rhs.append(root_invariant(degree, lc, roots))
    sol = solve(rows, rhs)
    return [(exps, c) for exps, c in zip(monos, sol) if c != 0]


if __name__ == "__main__":
    rng = random.Random(20100127)
    for degree in (2, 4, 6):
        terms = derive(degree, rng)
        print(f"_I{degree} = (")
        for exps, c in terms:
            print(f"    ({exps}, {c.numerator if c.denominator == 1 else repr(c)}),")
        print(")")
