"""Exact scalar arithmetic: rationals, odd prime fields, CRT and rational reconstruction.

Integers are Python ints and rationals are :class:`fractions.Fraction`.
Prime-field elements are :class:`Fp` instances created through a
:class:`PrimeField`.  Every value is immutable.
"""

from __future__ import annotations

import hashlib
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable

__all__ = [
    "QQ",
    "Fp",
    "PrimeField",
    "RationalField",
    "SeededSampler",
    "crt_combine",
    "is_probable_prime",
    "rational_reconstruct",
    "sample_scalar",
    "field_from_json",
    "scalar_to_str",
    "scalar_from_str",
]

_SMALL_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
    157, 163, 167, 173,
]


def is_probable_prime(n: int, rounds: int = 40) -> bool:
    """Miller-Rabin with the first ``rounds`` primes as witnesses."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES[:rounds]:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q; elements are ``Fraction`` instances."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fp):
            raise TypeError("cannot coerce a prime-field element into Q")
        if isinstance(x, str):
            return scalar_from_str(x)
        return Fraction(x)

    def is_square(self, x) -> bool:
        x = Fraction(x)
        if x < 0:
            return False
        return _is_square_int(x.numerator) and _is_square_int(x.denominator)

    def sqrt(self, x) -> Fraction:
        x = Fraction(x)
        if not self.is_square(x):
            raise ValueError(f"{x} is not a square in Q")
        return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))

    def to_json(self) -> dict:
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def _is_square_int(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class PrimeField:
    """The field F_p for an odd prime p > 3."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        p = int(p)
        if p <= 3:
            raise ValueError(f"prime field modulus must exceed 3, got {p}")
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = Fp(0, self)
        self.one = Fp(1, self)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, x) -> "Fp":
        if isinstance(x, Fp):
            if x.field.p != self.p:
                raise ValueError("elements of different prime fields")
            return x
        if isinstance(x, int):
            return Fp(x % self.p, self)
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return Fp(x.numerator * pow(den, -1, self.p) % self.p, self)
        if isinstance(x, str):
            return self(scalar_from_str(x))
        return self(int(x))

    def is_square(self, x) -> bool:
        v = self(x).v
        return v == 0 or pow(v, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x) -> "Fp":
        """Tonelli-Shanks square root; raises ValueError on non-residues."""
        p = self.p
        v = self(x).v
        if v == 0:
            return self.zero
        if pow(v, (p - 1) // 2, p) != 1:
            raise ValueError(f"{v} is not a square mod {p}")
        if p % 4 == 3:
            return Fp(pow(v, (p + 1) // 4, p), self)
        q, e = p - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, root = e, pow(z, q, p), pow(v, q, p), pow(v, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            bb = pow(c, 1 << (m - i - 1), p)
            m, c = i, bb * bb % p
            t, root = t * c % p, root * bb % p
        return Fp(root, self)

    def to_json(self) -> dict:
        return {"kind": "Fp", "p": str(self.p)}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Fp:
    """An element of F_p.  Arithmetic with plain ints and Fractions coerces."""

    __slots__ = ("v", "field")

    def __init__(self, v: int, field: PrimeField):
        self.v = v
        self.field = field

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.field.p != self.field.p:
                raise ValueError("elements of different prime fields")
            return other.v
        if isinstance(other, int):
            return other % self.field.p
        if isinstance(other, Fraction):
            return self.field(other).v
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp((self.v + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp((self.v - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp((o - self.v) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return Fp(self.v * pow(o, -1, self.field.p) % self.field.p, self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o % self.field.p, self.field) / self

    def __neg__(self):
        return Fp(-self.v % self.field.p, self.field)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise ZeroDivisionError("zero has no inverse")
            return Fp(pow(pow(self.v, -1, self.field.p), -n, self.field.p), self.field)
        return Fp(pow(self.v, n, self.field.p), self.field)

    def inverse(self) -> "Fp":
        return self ** -1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.field.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.field.p})"

    def __str__(self):
        return str(self.v)

    def to_json(self) -> dict:
        return {"p": str(self.field.p), "v": str(self.v)}


def field_from_json(obj: dict):
    kind = obj.get("kind")
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return PrimeField(int(obj["p"]))
    raise ValueError(f"unknown field kind {kind!r}")


def scalar_to_str(x) -> str:
    """Decimal serialization: ``"-123"``, ``"45/7"``, or the residue for F_p."""
    if isinstance(x, Fp):
        return str(x.v)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def scalar_from_str(text: str) -> Fraction:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        if int(den) <= 0:
            raise ValueError(f"non-positive denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def crt_combine(residues: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Combine ``(value, modulus)`` pairs with pairwise coprime moduli."""
    residues = [(int(v), int(m)) for v, m in residues]
    if not residues:
        return 0, 1
    for i in range(len(residues)):
        for j in range(i + 1, len(residues)):
            mi, mj = residues[i][1], residues[j][1]
            if math.gcd(mi, mj) != 1:
                raise ValueError(f"moduli {mi} and {mj} (positions {i}, {j}) are not coprime")

    def step(acc, item):
        v1, m1 = acc
        v2, m2 = item
        t = (v2 - v1) * pow(m1, -1, m2) % m2
        return v1 + m1 * t, m1 * m2

    value, modulus = reduce(step, residues, (0, 1))
    return value % modulus, modulus


def rational_reconstruct(value: int, modulus: int, bound: int | None = None) -> Fraction | None:
    """Return n/d with n = d*value (mod modulus) and |n|, d <= bound, or None.

    The default bound is floor(sqrt(modulus/2)), which makes the answer unique.
    """
    if not 0 <= value < modulus:
        raise ValueError(f"value {value} outside [0, {modulus})")
    if bound is None:
        bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, value
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound:
        return None
    if t1 < 0:
        r1, t1 = -r1, -t1
    if math.gcd(r1, t1) != 1 or math.gcd(t1, modulus) != 1:
        return None
    return Fraction(r1, t1)


class SeededSampler:
    """Counter-based scalar source: draw ``i`` depends only on (seed, i, stream)."""

    __slots__ = ("seed",)

    def __init__(self, seed: int = 0):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF

    def integer(self, index: int, bound: int, stream: int = 0) -> int:
        digest = hashlib.blake2b(
            f"{self.seed}:{stream}:{index}:{bound}".encode(), digest_size=32
        ).digest()
        return int.from_bytes(digest, "big") % bound

    def __repr__(self):
        return f"SeededSampler(seed={self.seed})"


def sample_scalar(sampler: SeededSampler, index: int, p: int | PrimeField, stream: int = 0) -> Fp:
    field = p if isinstance(p, PrimeField) else PrimeField(p)
    return field(sampler.integer(index, field.p, stream))
