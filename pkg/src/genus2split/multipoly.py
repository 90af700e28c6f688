"""Sparse multivariate polynomials and identity checking.

A :class:`MPoly` maps exponent tuples of a fixed arity to nonzero
coefficients.  Identities can be verified exactly (expansion over Q) or by
evaluation at random points of F_p (Schwartz-Zippel).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .algebra import PrimeField, SeededSampler, scalar_to_str

__all__ = [
    "IDENTITY_PRIMES",
    "MPoly",
    "RatFunc",
    "RationalFunctionField",
    "check_identity",
    "schwartz_zippel_failure_bound",
]


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def gens(cls, nvars: int) -> list["MPoly"]:
        out = []
        for i in range(nvars):
            e = [0] * nvars
            e[i] = 1
            out.append(cls(nvars, {tuple(e): Fraction(1)}))
        return out

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return other
        return MPoly.constant(self.nvars, other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, MPoly):
            raise TypeError("only division by scalars is supported")
        return MPoly(self.nvars, {e: Fraction(c) / scalar for e, c in self.terms.items()})

    def __pow__(self, n: int):
        result, base = MPoly.constant(self.nvars, 1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValueError:
            return False
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError("wrong number of arguments")
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def coefficient_in(self, var: int, k: int) -> "MPoly":
        """Coefficient of var^k, as an MPoly with that variable set to zero."""
        out = {}
        for e, c in self.terms.items():
            if e[var] == k:
                e2 = list(e)
                e2[var] = 0
                out[tuple(e2)] = c
        return MPoly(self.nvars, out)

    def reduce_monic(self, var: int, relation: Sequence["MPoly"]) -> "MPoly":
        """Remainder modulo var^n + sum_{i<n} relation[i] var^i (relation free of var)."""
        n = len(relation)
        acc = self
        while acc.degree_in(var) >= n:
            top = acc.degree_in(var)
            lead = acc.coefficient_in(var, top)
            shift = [0] * self.nvars
            shift[var] = top - n
            mono = MPoly(self.nvars, {tuple(shift): 1})
            full = MPoly(self.nvars, {(0,) * var + (n,) + (0,) * (self.nvars - var - 1): 1})
            for i, coeff in enumerate(relation):
                e = [0] * self.nvars
                e[var] = i
                full = full + coeff * MPoly(self.nvars, {tuple(e): 1})
            acc = acc - lead * mono * full
        return acc

    def to_json(self) -> list[dict]:
        return [
            {"exp": list(e), "coeff": scalar_to_str(c)}
            for e, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, nvars: int, items: list[dict]) -> "MPoly":
        from .algebra import scalar_from_str

        return cls(nvars, {tuple(d["exp"]): scalar_from_str(d["coeff"]) for d in items})

    def __repr__(self):
        return f"MPoly({self.nvars}, {len(self.terms)} terms)"


class RationalFunctionField:
    """Q(x_1, ..., x_n) as unreduced fractions of MPolys.

    Good enough to run the generic field code symbolically: equality is
    tested by cross-multiplication, so no polynomial gcd is needed.
    """

    characteristic = 0

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.zero = RatFunc(self, MPoly(nvars), MPoly.constant(nvars, Fraction(1)))
        self.one = RatFunc(self, MPoly.constant(nvars, Fraction(1)), MPoly.constant(nvars, Fraction(1)))

    def gens(self) -> list["RatFunc"]:
        return [self(g) for g in MPoly.gens(self.nvars)]

    def __call__(self, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, MPoly):
            return RatFunc(self, x, self.one.num)
        return RatFunc(self, MPoly.constant(self.nvars, Fraction(x)), self.one.num)

    def __eq__(self, other):
        return isinstance(other, RationalFunctionField) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("RatFunc", self.nvars))

    def __repr__(self):
        return f"Q(x1..x{self.nvars})"


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RationalFunctionField, num: MPoly, den: MPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if len(den.terms) == 1:
            (e, k), = den.terms.items()
            if not any(e) and k != 1:
                num, den = num / k, MPoly.constant(den.nvars, Fraction(1))
        self.field = field
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, (RatFunc, MPoly, int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.field, self.num + o.num, self.den)
        return RatFunc(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o / self

    def __pow__(self, n: int):
        if n < 0:
            return self.field.one / self ** (-n)
        return RatFunc(self.field, self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"RatFunc({self.num!r} / {self.den!r})"


# Distinct 6-digit primes for randomized identity checks.
IDENTITY_PRIMES = (
    999983, 999979, 999961, 999959, 999953, 999931, 999917, 999907, 999883, 999863,
    999853, 999809, 999773, 999769, 999763, 999749, 999727, 999721, 999683, 999671,
)


def schwartz_zippel_failure_bound(degree: int, primes: Sequence[int]) -> float:
    """Probability that a nonzero polynomial of this total degree vanishes at
    one independent uniform point per prime."""
    bound = 1.0
    for p in primes:
        bound *= min(1.0, degree / p)
    return bound


def check_identity(
    evaluate: Callable[[PrimeField, list], object],
    nvars: int,
    *,
    trials: int = 20,
    primes: Sequence[int] = IDENTITY_PRIMES,
    seed: int = 0,
) -> bool:
    """Randomized check that ``evaluate(field, point)`` is zero.

    ``evaluate`` returns zero on a true identity; points where it raises
    ZeroDivisionError (a denominator vanished) are skipped and redrawn.
    """
    sampler = SeededSampler(seed)
    for t in range(trials):
        field = PrimeField(primes[t % len(primes)])
        attempt = 0
        while True:
            point = [
                field(sampler.integer(t * 1000 + attempt, field.p, stream=i))
                for i in range(nvars)
            ]
            try:
                value = evaluate(field, point)
            except ZeroDivisionError:
                attempt += 1
                continue
            break
        if value != 0:
            return False
    return True
