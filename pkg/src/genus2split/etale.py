"""Quotient algebras: k[T]/(h) and the degree-6 splitting tower of a cubic.

For a monic square-free cubic h = T^3 + h2 T^2 + h1 T + h0 the tower is
A[R]/(R^2 - rho) with A = k[r]/(h(r)) and rho = -3r^2 - 2 h2 r + h2^2 - 4 h1,
the discriminant of h(T)/(T - r).  Its three roots of h are

    T1 = r,  T2 = (-(r + h2) + R)/2,  T3 = (-(r + h2) - R)/2.

For h = T^3 + bT + c this is k[r, R] with R^2 = -3r^2 - 4b.
"""

from __future__ import annotations

from .poly import UniPoly, determinant, is_squarefree

__all__ = [
    "QuotientRing",
    "Residue",
    "SplittingTower",
    "TowerElement",
    "CubicEtale",
    "etale_norm",
    "verify_square_in_quotient",
]


class QuotientRing:
    """k[T]/(h) for a monic h of positive degree."""

    def __init__(self, field, modulus: UniPoly):
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        if modulus.lc != 1:
            raise ValueError("modulus must be monic")
        self.field = field
        self.modulus = modulus
        self.n = modulus.degree
        self.zero = Residue(self, (field.zero,) * self.n)
        self.one = self([1])

    @property
    def characteristic(self):
        return self.field.characteristic

    def __call__(self, x) -> "Residue":
        if isinstance(x, Residue):
            if x.ring is self:
                return x
            if x.ring != self:
                raise ValueError("residue from a different quotient ring")
            return Residue(self, x.c)
        if isinstance(x, UniPoly):
            coeffs = (x % self.modulus).coeffs
        elif isinstance(x, (list, tuple)):
            coeffs = (UniPoly(self.field, x) % self.modulus).coeffs
        else:
            coeffs = (self.field(x),)
        coeffs = tuple(coeffs) + (self.field.zero,) * (self.n - len(coeffs))
        return Residue(self, coeffs)

    def gen(self) -> "Residue":
        return self([0, 1])

    def _reduce(self, coeffs: list) -> tuple:
        h = self.modulus.coeffs
        n = self.n
        for k in range(len(coeffs) - 1, n - 1, -1):
            c = coeffs[k]
            if c == 0:
                continue
            for j in range(n):
                coeffs[k - n + j] = coeffs[k - n + j] - c * h[j]
        out = coeffs[:n]
        return tuple(out) + (self.field.zero,) * (n - len(out))

    def __eq__(self, other):
        return (
            isinstance(other, QuotientRing)
            and other.field == self.field
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.field, self.modulus))

    def __repr__(self):
        return f"{self.field!r}[T]/({self.modulus!r})"


class Residue:
    __slots__ = ("ring", "c")

    def __init__(self, ring: QuotientRing, coeffs: tuple):
        self.ring = ring
        self.c = coeffs

    def _lift(self, other):
        if isinstance(other, Residue):
            return other
        return self.ring(other)

    def __add__(self, other):
        o = self._lift(other)
        return Residue(self.ring, tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Residue(self.ring, tuple(-a for a in self.c))

    def __sub__(self, other):
        o = self._lift(other)
        return Residue(self.ring, tuple(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Residue):
            if isinstance(other, (TowerElement, UniPoly)):
                return NotImplemented
            k = self.ring.field(other)
            return Residue(self.ring, tuple(a * k for a in self.c))
        zero = self.ring.field.zero
        out = [zero] * (2 * self.ring.n - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] = out[i + j] + a * b
        return Residue(self.ring, self.ring._reduce(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def multiplication_matrix(self) -> list[list]:
        """Column j holds the coordinates of self * T^j."""
        cols = []
        t = self.ring.gen()
        e = self
        for _ in range(self.ring.n):
            cols.append(e.c)
            e = e * t
        return [[cols[j][i] for j in range(self.ring.n)] for i in range(self.ring.n)]

    def norm(self):
        """Norm to k: the determinant of multiplication by self."""
        return determinant(self.multiplication_matrix(), self.ring.field)

    def inverse(self) -> "Residue":
        inv = _solve(self.multiplication_matrix(), [self.ring.field.one] + [self.ring.field.zero] * (self.ring.n - 1), self.ring.field)
        return Residue(self.ring, tuple(inv))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def is_scalar(self) -> bool:
        return all(a == 0 for a in self.c[1:])

    def scalar(self):
        if not self.is_scalar():
            raise ValueError("residue is not a base-field scalar")
        return self.c[0]

    def as_poly(self) -> UniPoly:
        return UniPoly(self.ring.field, self.c)

    def __call__(self, x):
        """Evaluate the representative polynomial at ``x`` (an embedding T -> x)."""
        acc = None
        for a in reversed(self.c):
            acc = a if acc is None else acc * x + a
        return acc

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return False
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(a != 0 for a in self.c)

    def __repr__(self):
        return f"Residue({', '.join(str(a) for a in self.c)})"


def _solve(matrix: list[list], rhs: list, field) -> list:
    n = len(matrix)
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("element is not invertible")
        a[col], a[piv] = a[piv], a[col]
        inv = field.one / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                m = a[i][col]
                a[i] = [x - m * y for x, y in zip(a[i], a[col])]
    return [a[i][n] for i in range(n)]


class CubicEtale(QuotientRing):
    """A = k[T]/(h) for a monic square-free cubic h."""

    def __init__(self, field, h: UniPoly):
        if h.degree != 3:
            raise ValueError("cubic etale algebra needs a cubic")
        if not is_squarefree(h):
            raise ValueError("h is not square-free")
        super().__init__(field, h)


class SplittingTower:
    """The degree-6 splitting algebra A[R]/(R^2 - rho) of a monic cubic."""

    def __init__(self, field, h: UniPoly):
        self.field = field
        self.h = h
        self.base = CubicEtale(field, h)
        h2, h1 = h[2], h[1]
        r = self.base.gen()
        self.rho = r * r * (-3) + r * (-2 * h2) + (h2 * h2 - 4 * h1)
        self.zero = TowerElement(self, self.base.zero, self.base.zero)
        self.one = TowerElement(self, self.base.one, self.base.zero)

    @classmethod
    def depressed(cls, field, b, c) -> "SplittingTower":
        """k[r, R] for f = T^3 + bT + c."""
        return cls(field, UniPoly(field, [c, b, 0, 1]))

    @property
    def characteristic(self):
        return self.field.characteristic

    def __call__(self, x) -> "TowerElement":
        if isinstance(x, TowerElement):
            return x
        if isinstance(x, Residue):
            return TowerElement(self, x, self.base.zero)
        return TowerElement(self, self.base(x), self.base.zero)

    @property
    def r(self) -> "TowerElement":
        return TowerElement(self, self.base.gen(), self.base.zero)

    @property
    def R(self) -> "TowerElement":
        return TowerElement(self, self.base.zero, self.base.one)

    def element(self, coeffs) -> "TowerElement":
        """From the 6 coordinates on the basis 1, r, r^2, R, rR, r^2R."""
        coeffs = list(coeffs)
        return TowerElement(self, self.base(coeffs[:3]), self.base(coeffs[3:]))

    def roots(self) -> tuple["TowerElement", "TowerElement", "TowerElement"]:
        """The three roots T1, T2, T3 of h inside the tower."""
        r, R = self.r, self.R
        half = self.field.one / 2
        shift = r + self.field(self.h[2])
        return r, (R - shift) * half, (-R - shift) * half

    def reduce(self, terms: dict) -> "TowerElement":
        """Canonical form of sum c_ij r^i R^j given as {(i, j): c}."""
        acc = self.zero
        r, R = self.r, self.R
        for (i, j), c in terms.items():
            acc = acc + (r ** i) * (R ** j) * self.field(c)
        return acc

    def sigma(self, x: "TowerElement") -> "TowerElement":
        """Automorphism cycling T1 -> T2 -> T3 (so R = T2 - T3 maps to T3 - T1)."""
        t1, t2, t3 = self.roots()
        return x.u(t2) + x.v(t2) * (t3 - t1)

    def tau(self, x: "TowerElement") -> "TowerElement":
        """Automorphism R -> -R fixing r (swaps T2 and T3)."""
        return TowerElement(self, x.u, -x.v)

    def conjugates(self, x: "TowerElement") -> list["TowerElement"]:
        """All six images of x under the S3 action."""
        out = []
        y = x
        for _ in range(3):
            out.append(y)
            out.append(self.tau(y))
            y = self.sigma(y)
        return out

    def __repr__(self):
        return f"SplittingTower({self.h!r})"


class TowerElement:
    """u + v R with u, v in A = k[r]/(h)."""

    __slots__ = ("tower", "u", "v")

    def __init__(self, tower: SplittingTower, u: Residue, v: Residue):
        self.tower = tower
        self.u = u
        self.v = v

    def _lift(self, other):
        if isinstance(other, TowerElement):
            return other
        return self.tower(other)

    def __add__(self, other):
        o = self._lift(other)
        return TowerElement(self.tower, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, -self.u, -self.v)

    def __sub__(self, other):
        o = self._lift(other)
        return TowerElement(self.tower, self.u - o.u, self.v - o.v)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            return NotImplemented
        if not isinstance(other, TowerElement):
            if isinstance(other, Residue):
                other = self.tower(other)
            else:
                k = self.tower.field(other)
                return TowerElement(self.tower, self.u * k, self.v * k)
        u = self.u * other.u + self.v * other.v * self.tower.rho
        v = self.u * other.v + self.v * other.u
        return TowerElement(self.tower, u, v)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.tower.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm_to_base(self) -> Residue:
        return self.u * self.u - self.v * self.v * self.tower.rho

    def norm(self):
        """Norm from the degree-6 tower down to k."""
        return self.norm_to_base().norm()

    def inverse(self) -> "TowerElement":
        n = self.norm_to_base()
        if not n:
            raise ZeroDivisionError("tower element is not invertible")
        ninv = n.inverse()
        return TowerElement(self.tower, self.u * ninv, -self.v * ninv)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def coords(self) -> tuple:
        return self.u.c + self.v.c

    def is_scalar(self) -> bool:
        return self.u.is_scalar() and not self.v

    def scalar(self):
        if not self.is_scalar():
            raise ValueError(f"{self!r} is not a base-field scalar")
        return self.u.c[0]

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return False
        return self.u == o.u and self.v == o.v

    def __hash__(self):
        return hash(self.coords())

    def __bool__(self):
        return bool(self.u) or bool(self.v)

    def __repr__(self):
        names = ["1", "r", "r^2", "R", "rR", "r^2R"]
        terms = [f"({c})*{n}" for c, n in zip(self.coords(), names) if c != 0]
        return " + ".join(terms) if terms else "0"


def etale_norm(Q: UniPoly, algebra: CubicEtale | SplittingTower) -> UniPoly:
    """Norm of Q in A[X] down to k[X]; Q's coefficients are residues of A.

    Computed as the product of the three conjugates inside the splitting
    tower.  With this convention etale_norm(X - T) = h(X) exactly.
    """
    tower = algebra if isinstance(algebra, SplittingTower) else SplittingTower(algebra.field, algebra.modulus)
    base = tower.base
    prod = UniPoly(tower, [1])
    for root in tower.roots():
        prod = prod * UniPoly(tower, [base(c)(root) for c in Q.coeffs])
    return UniPoly(tower.field, [c.scalar() for c in prod.coeffs])


def verify_square_in_quotient(candidate, target) -> bool:
    return candidate * candidate == target
