"""Bolza's three-parameter family and its correspondence with the (b, c, s) family.

(lambda, mu, nu) and (s, b, c) both carry weights (1, 2, 3).  The primed
parameters are rational functions over the common denominator
-nu^2 + 3 lambda mu nu - 2 mu^3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QQ, field_from_json, scalar_to_str
from .genus2 import HyperellipticModel
from .poly import UniPoly, poly_sqrt
from .family import FamilyParams

__all__ = [
    "BolzaParams",
    "bolza_curve",
    "bolza_to_family",
    "cover_numerators",
    "cover_is_square",
    "family_to_bolza",
]


@dataclass(frozen=True)
class BolzaParams:
    lam: object
    mu: object
    nu: object
    field: object = QQ

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            object.__setattr__(self, name, self.field(getattr(self, name)))

    @classmethod
    def from_json(cls, obj: dict, field=None) -> "BolzaParams":
        field = field or field_from_json(obj.get("field", {"kind": "Q"}))
        return cls(field(str(obj["lambda"])), field(str(obj["mu"])), field(str(obj["nu"])), field)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "lambda": scalar_to_str(self.lam),
            "mu": scalar_to_str(self.mu),
            "nu": scalar_to_str(self.nu),
        }

    @property
    def denominator(self):
        l, m, n = self.lam, self.mu, self.nu
        return -n * n + 3 * l * m * n - 2 * m ** 3

    def primes(self) -> tuple:
        """(lambda', mu', nu')."""
        l, m, n = self.lam, self.mu, self.nu
        den = self.denominator
        if den == 0:
            raise ValueError("-nu^2 + 3 lambda mu nu - 2 mu^3 vanishes")
        lp = -(2 * l * l * n - l * m * m - m * n) / (3 * den)
        mp = (l * l * m + l * n - 2 * m * m) / (9 * den)
        np_ = -(2 * l ** 3 - 3 * l * m + n) / (27 * den)
        return lp, mp, np_


def _sextic(q: BolzaParams) -> UniPoly:
    l, m, n = q.lam, q.mu, q.nu
    lp, mp, np_ = q.primes()
    return UniPoly(q.field, [
        n,
        -6 * lp * n,
        3 * (4 * mp * n + lp * m),
        2 * (l * lp + 5 * n * np_),
        3 * (4 * m * np_ + l * mp),
        -6 * l * np_,
        np_,
    ])


def bolza_curve(q: BolzaParams) -> HyperellipticModel:
    return HyperellipticModel(_sextic(q))


def _homogenize(coeffs, num: UniPoly, den: UniPoly) -> UniPoly:
    """sum c_i num^i den^(n-i) for the degree-n polynomial with coefficients coeffs."""
    n = len(coeffs) - 1
    acc = UniPoly(num.ring)
    for i, c in enumerate(coeffs):
        acc = acc + num ** i * den ** (n - i) * c
    return acc


def _cover_quartic(l, m, n, lp, mp, np_):
    """Coefficients (ascending) of R_1(z) = (l z - 2n)(n' z^3 + ... )."""
    cubic = [
        12 * n * (3 * m * mp - l * lp),
        12 * (9 * l * n * np_ + 3 * mp * n + lp * m),
        -3 * (9 * l * l * np_ - 6 * m * np_ - l * mp),
        np_,
    ]
    lin = [-2 * n, l]
    out = [0] * 5
    for i, a in enumerate(lin):
        for j, b in enumerate(cubic):
            out[i + j] = out[i + j] + a * b
    return out


def cover_numerators(q: BolzaParams) -> tuple[UniPoly, UniPoly]:
    """Polynomials P1, P2 with lambda R1(z1) R(x) = P1 / den1^4 and similarly P2.

    Each cover map is a square check: P_i must be a square in k[x].
    """
    k = q.field
    l, m, n = q.lam, q.mu, q.nu
    lp, mp, np_ = q.primes()
    R = _sextic(q)
    x = UniPoly.x(k)
    num1 = UniPoly(k, [3 * m * n, 4 * l * n, 0, 0, l])
    den1 = UniPoly(k, [(3 * m * l - n) / 2, 2 * l * l, l])
    num2 = UniPoly(k, [lp, 0, 0, 4 * lp * np_, 3 * mp * np_])
    den2 = x * x * UniPoly(k, [lp, 2 * lp * lp, (3 * mp * lp - np_) / 2])
    P1 = _homogenize(_cover_quartic(l, m, n, lp, mp, np_), num1, den1) * R * l
    P2 = _homogenize(_cover_quartic(lp, mp, np_, l, m, n), num2, den2) * R * lp
    return P1, P2


def cover_is_square(q: BolzaParams) -> tuple[bool, bool]:
    P1, P2 = cover_numerators(q)
    return poly_sqrt(P1) is not None, poly_sqrt(P2) is not None


def bolza_to_family(q: BolzaParams) -> dict:
    """(b, c, a, d, s) putting E1 in short Weierstrass form."""
    l, m, n = q.lam, q.mu, q.nu
    w = n * n - 3 * n * m * l + 2 * m ** 3
    if (n - m * l) * w == 0:
        raise ValueError("parameters lie on (nu - mu lambda)(nu^2 - 3 nu mu lambda + 2 mu^3) = 0")
    b = 3 * w ** 2 * (
        2 * n ** 4 * m - 5 * n ** 4 * l ** 2 + 2 * n ** 3 * m * l ** 3 + 16 * n ** 3 * l ** 5
        - n ** 2 * m ** 4 + 10 * n ** 2 * m ** 3 * l ** 2 - 45 * n ** 2 * m ** 2 * l ** 4
        - 6 * n * m ** 5 * l + 36 * n * m ** 4 * l ** 3 - 9 * m ** 6 * l ** 2
    )
    c = w ** 3 * (
        n ** 7 - 3 * n ** 6 * m * l - 10 * n ** 6 * l ** 3 - 10 * n ** 5 * m ** 3
        + 84 * n ** 5 * m ** 2 * l ** 2 - 138 * n ** 5 * m * l ** 4 + 160 * n ** 5 * l ** 6
        - 30 * n ** 4 * m ** 4 * l + 68 * n ** 4 * m ** 3 * l ** 3 - 78 * n ** 4 * m ** 2 * l ** 5
        - 288 * n ** 4 * m * l ** 7 - 2 * n ** 3 * m ** 6 + 30 * n ** 3 * m ** 5 * l ** 2
        - 189 * n ** 3 * m ** 4 * l ** 4 + 738 * n ** 3 * m ** 3 * l ** 6
        - 18 * n ** 2 * m ** 7 * l + 198 * n ** 2 * m ** 6 * l ** 3 - 729 * n ** 2 * m ** 5 * l ** 5
        - 54 * n * m ** 8 * l ** 2 + 324 * n * m ** 7 * l ** 4 - 54 * m ** 9 * l ** 3
    )
    a = w * (
        2 * n ** 3 * l - 3 * n ** 2 * m ** 2 - 4 * n ** 2 * l ** 4 + 2 * n * m ** 3 * l
        + 6 * n * m ** 2 * l ** 3 - 3 * m ** 4 * l ** 2
    ) / (m * l - n)
    d = 3 * (n - m * l) * w * (n * n - 6 * n * m * l + 4 * n * l ** 3 + 4 * m ** 3 - 3 * m * m * l * l)
    s = w * (
        n ** 3 * l + 3 * n ** 2 * m ** 2 - 18 * n ** 2 * m * l ** 2 + 16 * n ** 2 * l ** 4
        + 10 * n * m ** 3 * l - 15 * n * m ** 2 * l ** 3 + 3 * m ** 4 * l ** 2
    ) / (n - m * l)
    return {"b": b, "c": c, "a": a, "d": d, "s": s}


def psi(p: FamilyParams):
    b, c, s = p.b, p.c, p.s
    return (
        2 * b ** 6 + 36 * b ** 5 * s ** 2 + 45 * b ** 4 * c * s + 72 * b ** 4 * s ** 4
        + 45 * b ** 3 * c ** 2 + 36 * b ** 3 * c * s ** 3 - 36 * b ** 3 * s ** 6
        + 297 * b ** 2 * c ** 2 * s ** 2 - 378 * b ** 2 * c * s ** 5 + 54 * b ** 2 * s ** 8
        + 324 * b * c ** 3 * s - 81 * b * c ** 2 * s ** 4 + 324 * b * c * s ** 7 + 216 * c ** 4
        - 324 * c ** 3 * s ** 3 + 891 * c ** 2 * s ** 6 - 27 * c * s ** 9
    )


def family_to_bolza(p: FamilyParams) -> tuple:
    """(psi, mu/lambda^2, nu/lambda^3) for the family point (b, c, s)."""
    b, c, s = p.b, p.c, p.s
    f_s = b * s + c + s ** 3
    m = b * b - 6 * b * s * s - 12 * c * s - 3 * s ** 4
    e = 4 * b ** 3 + 27 * c ** 2
    if f_s * m * e == 0:
        raise ValueError("(bs + c + s^3)(b^2 - 6bs^2 - 12cs - 3s^4)(4b^3 + 27c^2) vanishes")
    ps = psi(p)
    num = (2 * b ** 4 - 15 * b ** 2 * c * s + 30 * b ** 2 * s ** 4 + 9 * b * c ** 2
           + 90 * b * c * s ** 3 + 135 * c ** 2 * s ** 2 - 27 * c * s ** 5)
    mu_l2 = num * ps / (3 * f_s ** 2 * m ** 2 * e)
    nu_l3 = -ps ** 2 / (f_s ** 2 * m ** 3 * e)
    return ps, mu_l2, nu_l3
