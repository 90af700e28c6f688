"""Dense univariate polynomials over an exact coefficient ring.

A :class:`UniPoly` stores ascending coefficients with leading zeros trimmed.
The ``ring`` is any callable that coerces integers into coefficients and
exposes ``zero``/``one`` (``QQ``, a :class:`PrimeField`, or an algebra from
:mod:`genus2split.etale`).  Division-based operations need a field.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import scalar_to_str

__all__ = [
    "UniPoly",
    "determinant",
    "discriminant",
    "is_squarefree",
    "poly_sqrt",
    "resultant",
    "sylvester_matrix",
]


class UniPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Sequence = ()):
        cs = [ring(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, ring) -> "UniPoly":
        return cls(ring, [0, 1])

    @classmethod
    def constant(cls, ring, c) -> "UniPoly":
        return cls(ring, [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.ring.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def __iter__(self):
        return iter(self.coeffs)

    def _lift(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly(self.ring, [other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.ring, [self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.ring(other)
            return UniPoly(self.ring, [a * c for a in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = UniPoly(self.ring, [1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == self._lift(other).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, g: "UniPoly") -> "UniPoly":
        acc = UniPoly(self.ring)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def translate(self, t) -> "UniPoly":
        """f(X + t)."""
        return self.compose(UniPoly(self.ring, [t, 1]))

    def reflect(self) -> "UniPoly":
        """f(-X)."""
        return UniPoly(self.ring, [c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def reversed(self, n: int | None = None) -> "UniPoly":
        """X^n f(1/X) with n defaulting to the degree."""
        n = self.degree if n is None else n
        return UniPoly(self.ring, [self[n - i] for i in range(n + 1)])

    def derivative(self) -> "UniPoly":
        return UniPoly(self.ring, [c * i for i, c in enumerate(self.coeffs)][1:])

    def map_coeffs(self, fn, ring=None) -> "UniPoly":
        ring = self.ring if ring is None else ring
        return UniPoly(ring, [fn(c) for c in self.coeffs])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [self.ring.zero] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = self.ring.one / other.lc
        dg = other.degree
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] * inv
            if c == 0:
                continue
            q[k - dg] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dg + j] = rem[k - dg + j] - c * b
        return UniPoly(self.ring, q), UniPoly(self.ring, rem[:dg] if dg > 0 else [])

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (self.ring.one / self.lc)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def to_json(self) -> list[str]:
        return [scalar_to_str(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            terms.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(terms)


def resultant(f: UniPoly, g: UniPoly):
    """Res(f, g) over a field via the Euclidean algorithm."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial")
    ring = f.ring
    res = ring.one
    a, b = f, g
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc ** da
        r = a % b
        if r.is_zero():
            return ring.zero
        if (da * db) % 2:
            res = -res
        res = res * b.lc ** (da - r.degree)
        a, b = b, r


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list]:
    m, n = f.degree, g.degree
    zero = f.ring.zero
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f.coeffs)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g.coeffs)):
            row[i + j] = c
        rows.append(row)
    return rows


def determinant(rows: list[list], ring):
    """Gaussian-elimination determinant over a field."""
    a = [list(r) for r in rows]
    n = len(a)
    det = ring.one
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return ring.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = ring.one / p
        for i in range(col + 1, n):
            if a[i][col] == 0:
                continue
            m = a[i][col] * inv
            for j in range(col, n):
                a[i][j] = a[i][j] - m * a[col][j]
    return det


def discriminant(f: UniPoly):
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f) for deg f = n >= 2."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(f, f.derivative())
    if (n * (n - 1) // 2) % 2:
        r = -r
    return r / f.lc


def is_squarefree(f: UniPoly) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    return f.gcd(f.derivative()).degree == 0


def poly_sqrt(f: UniPoly) -> UniPoly | None:
    """Return S with S*S == f, or None when f is not a square in ring[X].

    ``f.ring`` must provide ``is_square`` and ``sqrt``.
    """
    ring = f.ring
    if f.is_zero():
        return f
    if f.degree % 2 or not ring.is_square(f.lc):
        return None
    m = f.degree // 2
    s = [ring.zero] * (m + 1)
    s[m] = ring.sqrt(f.lc)
    inv2 = ring.one / (2 * s[m])
    for k in range(1, m + 1):
        target = f[2 * m - k]
        acc = ring.zero
        for i in range(m - k + 1, m):
            j = 2 * m - k - i
            if m - k < j <= m:
                acc = acc + s[i] * s[j]
        s[m - k] = (target - acc) * inv2
    root = UniPoly(ring, s)
    return root if root * root == f else None
