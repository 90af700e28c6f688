"""Genus-2 models, Igusa-Clebsch invariants and the bielliptic (2,2)-split model.

I2, I4, I6 are the root-difference invariants of a binary sextic
f = f6 prod(X - w_i) (sums over matchings, triangle pairs and triangular
prisms of squared root differences), stored below as coefficient
polynomials.  I10 = f6^10 prod_{i<j} (w_i - w_j)^2 is the discriminant of f
as a binary sextic.  Quintics are sextics with a root at infinity.
The tables come from ``tools/derive_igusa.py``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .algebra import field_from_json, scalar_to_str
from .poly import UniPoly, discriminant, is_squarefree

__all__ = [
    "AbsoluteInvariants",
    "HyperellipticModel",
    "IgusaInvariants",
    "SingularCurveError",
    "Split22",
    "absolute_invariants",
    "igusa_invariants",
    "is_geometrically_isomorphic",
    "sextic_discriminant",
    "split22_model",
]

# (exponents of f0..f6, coefficient)
_I2 = (
    ((0, 0, 0, 2, 0, 0, 0), 6),
    ((0, 0, 1, 0, 1, 0, 0), -16),
    ((0, 1, 0, 0, 0, 1, 0), 40),
    ((1, 0, 0, 0, 0, 0, 1), -240),
)
_I4 = (
    ((0, 0, 2, 0, 2, 0, 0), 4),
    ((0, 0, 2, 1, 0, 1, 0), -12),
    ((0, 0, 3, 0, 0, 0, 1), 48),
    ((0, 1, 0, 1, 2, 0, 0), -12),
    ((0, 1, 0, 2, 0, 1, 0), 36),
    ((0, 1, 1, 0, 1, 1, 0), 4),
    ((0, 1, 1, 1, 0, 0, 1), -180),
    ((0, 2, 0, 0, 0, 2, 0), -80),
    ((0, 2, 0, 0, 1, 0, 1), 300),
    ((1, 0, 0, 0, 3, 0, 0), 48),
    ((1, 0, 0, 1, 1, 1, 0), -180),
    ((1, 0, 0, 2, 0, 0, 1), 324),
    ((1, 0, 1, 0, 0, 2, 0), 300),
    ((1, 0, 1, 0, 1, 0, 1), -504),
    ((1, 1, 0, 0, 0, 1, 1), -540),
    ((2, 0, 0, 0, 0, 0, 2), 1620),
)
_I6 = (
    ((0, 0, 2, 2, 2, 0, 0), 8),
    ((0, 0, 2, 3, 0, 1, 0), -24),
    ((0, 0, 3, 0, 3, 0, 0), -24),
    ((0, 0, 3, 1, 1, 1, 0), 76),
    ((0, 0, 3, 2, 0, 0, 1), 60),
    ((0, 0, 4, 0, 0, 2, 0), -36),
    ((0, 0, 4, 0, 1, 0, 1), -160),
    ((0, 1, 0, 3, 2, 0, 0), -24),
    ((0, 1, 0, 4, 0, 1, 0), 72),
    ((0, 1, 1, 1, 3, 0, 0), 76),
    ((0, 1, 1, 2, 1, 1, 0), -238),
    ((0, 1, 1, 3, 0, 0, 1), -198),
    ((0, 1, 2, 0, 2, 1, 0), 28),
    ((0, 1, 2, 1, 0, 2, 0), 26),
    ((0, 1, 2, 1, 1, 0, 1), 492),
    ((0, 1, 3, 0, 0, 1, 1), 616),
    ((0, 2, 0, 0, 4, 0, 0), -36),
    ((0, 2, 0, 1, 2, 1, 0), 26),
    ((0, 2, 0, 2, 0, 2, 0), 176),
    ((0, 2, 0, 2, 1, 0, 1), 330),
    ((0, 2, 1, 0, 1, 2, 0), 64),
    ((0, 2, 1, 0, 2, 0, 1), -640),
    ((0, 2, 1, 1, 0, 1, 1), -1860),
    ((0, 2, 2, 0, 0, 0, 2), -900),
    ((0, 3, 0, 0, 0, 3, 0), -320),
    ((0, 3, 0, 0, 1, 1, 1), 1600),
    ((0, 3, 0, 1, 0, 0, 2), 2250),
    ((1, 0, 0, 2, 3, 0, 0), 60),
    ((1, 0, 0, 3, 1, 1, 0), -198),
    ((1, 0, 0, 4, 0, 0, 1), 162),
    ((1, 0, 1, 0, 4, 0, 0), -160),
    ((1, 0, 1, 1, 2, 1, 0), 492),
    ((1, 0, 1, 2, 0, 2, 0), 330),
    ((1, 0, 1, 2, 1, 0, 1), -468),
    ((1, 0, 2, 0, 1, 2, 0), -640),
    ((1, 0, 2, 0, 2, 0, 1), 424),
    ((1, 0, 2, 1, 0, 1, 1), -876),
    ((1, 0, 3, 0, 0, 0, 2), -96),
    ((1, 1, 0, 0, 3, 1, 0), 616),
    ((1, 1, 0, 1, 1, 2, 0), -1860),
    ((1, 1, 0, 1, 2, 0, 1), -876),
    ((1, 1, 0, 2, 0, 1, 1), 1818),
    ((1, 1, 1, 0, 0, 3, 0), 1600),
    ((1, 1, 1, 0, 1, 1, 1), 3472),
    ((1, 1, 1, 1, 0, 0, 2), 3060),
    ((1, 2, 0, 0, 0, 2, 1), -2240),
    ((1, 2, 0, 0, 1, 0, 2), -18600),
    ((2, 0, 0, 0, 2, 2, 0), -900),
    ((2, 0, 0, 0, 3, 0, 1), -96),
    ((2, 0, 0, 1, 0, 3, 0), 2250),
    ((2, 0, 0, 1, 1, 1, 1), 3060),
    ((2, 0, 0, 2, 0, 0, 2), -10044),
    ((2, 0, 1, 0, 0, 2, 1), -18600),
    ((2, 0, 1, 0, 1, 0, 2), 20664),
    ((2, 1, 0, 0, 0, 1, 2), 59940),
    ((3, 0, 0, 0, 0, 0, 3), -119880),
)


class SingularCurveError(ValueError):
    """The defining polynomial is not square-free of degree 5 or 6."""


@dataclass(frozen=True)
class HyperellipticModel:
    """Y^2 = f(X) with f square-free of degree 5 or 6."""

    f: UniPoly

    def __post_init__(self):
        if self.f.degree not in (5, 6):
            raise SingularCurveError(f"degree {self.f.degree} is not 5 or 6")
        if self.f.ring.characteristic in (2, 3):
            raise ValueError("characteristic 2 and 3 are excluded")
        if not is_squarefree(self.f):
            raise SingularCurveError("f is not square-free")

    @classmethod
    def from_coeffs(cls, field, coeffs) -> "HyperellipticModel":
        return cls(UniPoly(field, coeffs))

    @property
    def field(self):
        return self.f.ring

    @property
    def coeffs(self) -> tuple:
        """f0, ..., f6 (f6 may be zero)."""
        return tuple(self.f[i] for i in range(7))

    def contains(self, x, y) -> bool:
        return y * y == self.f(x)

    def transform(self, alpha, beta, gamma, delta) -> "HyperellipticModel":
        """Model of the same curve under X -> (alpha X + beta)/(gamma X + delta)."""
        ring = self.field
        num = UniPoly(ring, [beta, alpha])
        den = UniPoly(ring, [delta, gamma])
        acc = UniPoly(ring)
        for i in range(7):
            acc = acc + (num ** i) * (den ** (6 - i)) * self.f[i]
        return HyperellipticModel(acc)

    def twist(self, d) -> "HyperellipticModel":
        return HyperellipticModel(self.f * d)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "coeffs": [scalar_to_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "HyperellipticModel":
        field = field_from_json(obj["field"])
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) > 7:
            raise ValueError("coeffs must be a list of at most 7 entries")
        return cls.from_coeffs(field, [field(str(c)) for c in coeffs])


class IgusaInvariants(NamedTuple):
    I2: object
    I4: object
    I6: object
    I10: object

    def to_json(self) -> dict:
        return {k: scalar_to_str(v) for k, v in self._asdict().items()}


class AbsoluteInvariants(NamedTuple):
    i1: object
    i2: object
    i3: object

    def to_json(self) -> dict:
        return {k: scalar_to_str(v) for k, v in self._asdict().items()}


def _evaluate(table, coeffs, ring):
    total = ring.zero
    for exps, c in table:
        term = ring(c)
        for f, e in zip(coeffs, exps):
            if e:
                term = term * f ** e
        total = total + term
    return total


def sextic_discriminant(f: UniPoly):
    """Discriminant of f as a binary sextic (f6 = 0 allowed)."""
    if f.degree == 6:
        return discriminant(f)
    if f.degree == 5:
        return f[5] ** 2 * discriminant(f)
    return f.ring.zero


def igusa_invariants(model: HyperellipticModel | UniPoly) -> IgusaInvariants:
    f = model.f if isinstance(model, HyperellipticModel) else model
    if f.degree not in (5, 6):
        raise SingularCurveError(f"degree {f.degree} is not 5 or 6")
    ring = f.ring
    coeffs = [f[i] for i in range(7)]
    i10 = sextic_discriminant(f)
    if i10 == 0:
        raise SingularCurveError("discriminant vanishes")
    return IgusaInvariants(
        _evaluate(_I2, coeffs, ring),
        _evaluate(_I4, coeffs, ring),
        _evaluate(_I6, coeffs, ring),
        i10,
    )


def absolute_invariants(inv: IgusaInvariants) -> AbsoluteInvariants:
    I2, I4, I6, I10 = (Fraction(x) if isinstance(x, int) else x for x in inv)
    if I2 == 0:
        raise ZeroDivisionError("I2 = 0: absolute invariants are undefined")
    return AbsoluteInvariants(
        144 * I4 / I2 ** 2,
        -1728 * (I2 * I4 - 3 * I6) / I2 ** 3,
        486 * I10 / I2 ** 5,
    )


_WEIGHTS = (1, 2, 3, 5)


def weighted_projective_equal(a, b) -> bool:
    """Whether some nonzero lambda has b_i = lambda^w_i a_i, weights (1, 2, 3, 5)."""
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
    for i in range(4):
        for j in range(i + 1, 4):
            wi, wj = _WEIGHTS[i], _WEIGHTS[j]
            if a[i] ** wj * b[j] ** wi != b[i] ** wj * a[j] ** wi:
                return False
    return True


def is_geometrically_isomorphic(m1: HyperellipticModel, m2: HyperellipticModel) -> bool:
    return weighted_projective_equal(igusa_invariants(m1), igusa_invariants(m2))


@dataclass(frozen=True)
class Split22:
    """C2: Y^2 = g(X^2) with its two elliptic quotients and cover maps."""

    C2: HyperellipticModel
    E1: UniPoly
    E2: UniPoly
    psi1: Callable
    psi2: Callable


def split22_model(c0, c1, c2, c3, field) -> Split22:
    """C2: Y^2 = c3 X^6 + c2 X^4 + c1 X^2 + c0 and its covers of
    E1: V^2 = c3 U^3 + c2 U^2 + c1 U + c0 and E2: Z^2 = c0 W^3 + c1 W^2 + c2 W + c3."""
    C2 = HyperellipticModel(UniPoly(field, [c0, 0, c1, 0, c2, 0, c3]))
    E1 = UniPoly(field, [c0, c1, c2, c3])
    E2 = UniPoly(field, [c3, c2, c1, c0])

    def psi1(x, y):
        return x * x, y

    def psi2(x, y):
        if x == 0:
            raise ZeroDivisionError("psi2 is not defined at X = 0 on the affine chart")
        return 1 / (x * x), y / (x * x * x)

    return Split22(C2, E1, E2, psi1, psi2)
