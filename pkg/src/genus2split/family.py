"""The two-parameter-plus-one family of genus-2 curves with (4,4)-split Jacobians.

Coordinates (b, c, s) carry weights (2, 3, 1).  E1 is V^2 = f(U) = U^3 + bU + c,
C2 is the bielliptic curve Y^2 = g(X) = f(X^2/d + a), and C4 is its
Richelot image.  The four degeneracy conditions are

    (1) 4b^3 + 27c^2
    (2) 3bs^4 + 18cs^3 - 6b^2s^2 - 6bcs - b^3 - 9c^2
    (3) s^3 + bs + c
    (4) s^6 + 5bs^4 + 20cs^3 - 5b^2s^2 - 4bcs - b^3 - 8c^2
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QQ, field_from_json, scalar_to_str
from .etale import QuotientRing, SplittingTower, TowerElement, verify_square_in_quotient
from .genus2 import HyperellipticModel, SingularCurveError
from .poly import UniPoly, discriminant
from .richelot import QuadraticSplitting, richelot, splitting_from_quadratic

__all__ = [
    "C4ClosedForm",
    "PAIRINGS",
    "DegenerateParametersError",
    "DerivedParams",
    "FamilyParams",
    "c4_disc_closed_form",
    "check_roots_w",
    "c4_via_richelot",
    "condition_values",
    "c2_coefficients",
    "curve_C2",
    "curve_C2_composed",
    "curve_C4",
    "curve_E2",
    "degeneracy_flags",
    "derive_params",
    "family_splitting",
    "has_involution",
    "kappe_warren",
    "limit_curve",
    "q2",
    "roots_w",
    "splitting_LR1",
]


class DegenerateParametersError(ValueError):
    """Parameters hit one of the numbered degeneracy conditions."""

    def __init__(self, conditions, message=None):
        self.conditions = frozenset(conditions)
        names = ", ".join(f"({i})" for i in sorted(self.conditions))
        super().__init__(message or f"degenerate parameters: condition {names}")


@dataclass(frozen=True)
class FamilyParams:
    b: object
    c: object
    s: object
    field: object = QQ

    def __post_init__(self):
        for name in ("b", "c", "s"):
            object.__setattr__(self, name, self.field(getattr(self, name)))

    @classmethod
    def from_json(cls, obj: dict, field=None) -> "FamilyParams":
        field = field or field_from_json(obj.get("field", {"kind": "Q"}))
        return cls(field(str(obj["b"])), field(str(obj["c"])), field(str(obj["s"])), field)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "b": scalar_to_str(self.b),
            "c": scalar_to_str(self.c),
            "s": scalar_to_str(self.s),
        }

    def scaled(self, lam) -> "FamilyParams":
        lam = self.field(lam)
        return FamilyParams(lam ** 2 * self.b, lam ** 3 * self.c, lam * self.s, self.field)

    def cubic(self) -> UniPoly:
        return UniPoly(self.field, [self.c, self.b, 0, 1])


def condition_values(p: FamilyParams) -> tuple:
    b, c, s = p.b, p.c, p.s
    return (
        4 * b ** 3 + 27 * c ** 2,
        3 * b * s ** 4 + 18 * c * s ** 3 - 6 * b ** 2 * s ** 2 - 6 * b * c * s - b ** 3 - 9 * c ** 2,
        s ** 3 + b * s + c,
        s ** 6 + 5 * b * s ** 4 + 20 * c * s ** 3 - 5 * b ** 2 * s ** 2 - 4 * b * c * s - b ** 3 - 8 * c ** 2,
    )


def degeneracy_flags(p: FamilyParams) -> frozenset:
    return frozenset(i + 1 for i, v in enumerate(condition_values(p)) if v == 0)


def _require(p: FamilyParams, conditions) -> None:
    hit = degeneracy_flags(p) & set(conditions)
    if hit:
        raise DegenerateParametersError(hit)


@dataclass(frozen=True)
class DerivedParams:
    a: object
    t0: object
    t1: object
    t2: object
    d: object
    D: object

    def to_json(self) -> dict:
        return {k: scalar_to_str(getattr(self, k)) for k in ("a", "t0", "t1", "t2", "d", "D")}


def derive_params(p: FamilyParams) -> DerivedParams:
    """a and t = t2 r^2 + t1 r + t0 with r^2 + a r + a^2 + b = t^2 mod f(r)."""
    _require(p, (3,))
    b, c, s = p.b, p.c, p.s
    fs = s ** 3 + b * s + c
    a = (s ** 4 - 2 * b * s ** 2 - 8 * c * s + b ** 2) / (4 * fs)
    t0 = (-s ** 4 - 6 * b * s ** 2 - 4 * c * s - b ** 2) / (4 * fs)
    t1 = (-s ** 3 + b * s + 2 * c) / (2 * fs)
    t2 = (-3 * s ** 2 - b) / (2 * fs)
    A = QuotientRing(p.field, p.cubic())
    r = A.gen()
    if not verify_square_in_quotient(t2 * r * r + t1 * r + t0, r * r + a * r + (a * a + b)):
        raise ArithmeticError("square identity failed for the parametrization of a")
    D = -4 * b ** 3 - 27 * c ** 2
    return DerivedParams(a, t0, t1, t2, -D * fs, D)


def _model(f: UniPoly, p: FamilyParams) -> HyperellipticModel:
    try:
        return HyperellipticModel(f)
    except SingularCurveError as exc:
        flags = degeneracy_flags(p)
        if flags:
            raise DegenerateParametersError(flags, f"{exc}; conditions {sorted(flags)}") from exc
        raise


def c2_coefficients(p: FamilyParams) -> list:
    """Coefficients g0..g6 of C2 from the closed form."""
    _require(p, (1, 3))
    b, c, s = p.b, p.c, p.s
    e = 4 * b ** 3 + 27 * c ** 2
    fs = s ** 3 + b * s + c
    P = (3 * s ** 8 + 4 * b * s ** 6 - 48 * c * s ** 5 + 50 * b ** 2 * s ** 4 + 128 * b * c * s ** 3
         + 4 * b ** 3 * s ** 2 + 192 * c ** 2 * s ** 2 - 16 * b ** 2 * c * s + 3 * b ** 4 + 16 * b * c ** 2)
    J = condition_values(p)[3]
    zero = p.field.zero
    return [
        J ** 2 / (64 * fs ** 3), zero,
        P / (16 * e * fs ** 3), zero,
        3 * (s ** 4 - 2 * b * s ** 2 - 8 * c * s + b ** 2) / (4 * e ** 2 * fs ** 3), zero,
        1 / (e ** 3 * fs ** 3),
    ]


def curve_C2(p: FamilyParams) -> HyperellipticModel:
    """C2 from its closed-form coefficients."""
    return _model(UniPoly(p.field, c2_coefficients(p)), p)


def curve_C2_composed(p: FamilyParams) -> UniPoly:
    """The second route: g(X) = f(X^2/d + a) with d = (4b^3 + 27c^2) f(s)."""
    _require(p, (1, 3))
    dp = derive_params(p)
    inner = UniPoly(p.field, [dp.a, 0, 1 / dp.d])
    return p.cubic().compose(inner)


def curve_E2(p: FamilyParams) -> UniPoly:
    """The quartic q(U) of E2: W^2 = d (U - a) f(U)."""
    _require(p, (1, 3))
    dp = derive_params(p)
    return UniPoly(p.field, [-dp.a, 1]) * p.cubic() * dp.d


@dataclass(frozen=True)
class C4ClosedForm:
    E: object
    G: object
    H: object
    J: object
    K: object
    F: UniPoly


def c4_closed_form(p: FamilyParams) -> C4ClosedForm:
    b, c, s = p.b, p.c, p.s
    e = 4 * b ** 3 + 27 * c ** 2
    fs = s ** 3 + b * s + c
    n = condition_values(p)[1] ** 3
    E = (9 * c * s ** 7 - 26 * b ** 2 * s ** 6 - 171 * b * c * s ** 5 + 34 * b ** 3 * s ** 4
         - 333 * c ** 2 * s ** 4 + 155 * b ** 2 * c * s ** 3 - 6 * b ** 4 * s ** 2
         + 126 * b * c ** 2 * s ** 2 + 7 * b ** 3 * c * s + 144 * c ** 3 * s - 2 * b ** 5
         - 17 * b ** 2 * c ** 2)
    G = (7 * s ** 6 + 23 * b * s ** 4 + 68 * c * s ** 3 - 11 * b ** 2 * s ** 2 - 4 * b * c * s
         - 3 * b ** 3 - 20 * c ** 2)
    H = (27 * c * s ** 11 + 6 * b ** 2 * s ** 10 + 585 * b * c * s ** 9 - 402 * b ** 3 * s ** 8
         + 2349 * c ** 2 * s ** 8 - 3330 * b ** 2 * c * s ** 7 + 460 * b ** 4 * s ** 6
         - 6156 * b * c ** 2 * s ** 6 + 1410 * b ** 3 * c * s ** 5 - 7776 * c ** 3 * s ** 5
         + 140 * b ** 5 * s ** 4 + 4230 * b ** 2 * c ** 2 * s ** 4 + 23 * b ** 4 * c * s ** 3
         + 3024 * b * c ** 3 * s ** 3 + 46 * b ** 6 * s ** 2 + 516 * b ** 3 * c ** 2 * s ** 2
         + 3024 * c ** 4 * s ** 2 + 5 * b ** 5 * c * s - 48 * b ** 2 * c ** 3 * s + 6 * b ** 7
         + 85 * b ** 4 * c ** 2 + 288 * b * c ** 4)
    J = condition_values(p)[3]
    K = (27 * c * s ** 9 - 54 * b ** 2 * s ** 8 - 324 * b * c * s ** 7 + 36 * b ** 3 * s ** 6
         - 891 * c ** 2 * s ** 6 + 378 * b ** 2 * c * s ** 5 - 72 * b ** 4 * s ** 4
         + 81 * b * c ** 2 * s ** 4 - 36 * b ** 3 * c * s ** 3 + 324 * c ** 3 * s ** 3
         - 36 * b ** 5 * s ** 2 - 297 * b ** 2 * c ** 2 * s ** 2 - 45 * b ** 4 * c * s
         - 324 * b * c ** 3 * s - 2 * b ** 6 - 45 * b ** 3 * c ** 2 - 216 * c ** 4)
    F = UniPoly(p.field, [
        -fs * J * K / (64 * n),
        3 * fs ** 2 * (3 * s ** 4 + 6 * b * s ** 2 + 12 * c * s - b ** 2) * J / (16 * n),
        -fs * H / (16 * e * n),
        -fs ** 2 * G / (2 * e * n),
        3 * fs * E / (4 * e ** 2 * n),
        3 * fs ** 2 * (3 * s ** 2 + b) / (e ** 2 * n),
        fs * (27 * c * s ** 3 - 18 * b ** 2 * s ** 2 - 27 * b * c * s - 2 * b ** 3 - 27 * c ** 2) / (e ** 3 * n),
    ])
    return C4ClosedForm(E, G, H, J, K, F)


def curve_C4(p: FamilyParams) -> tuple[HyperellipticModel, C4ClosedForm]:
    _require(p, (1, 2, 3, 4))
    form = c4_closed_form(p)
    return _model(form.F, p), form


def c4_disc_closed_form(p: FamilyParams):
    """disc(F) = 2^6 f(s)^22 J / ((4b^3+27c^2)^14 (2)^18), (2) the second condition."""
    _require(p, (1, 2))
    e, n, fs, J = condition_values(p)
    return 2 ** 6 * fs ** 22 * J / (e ** 14 * n ** 18)


# -- the s = infinity limit ---------------------------------------------------


def limit_curve(b, c, field=QQ) -> HyperellipticModel:
    b, c = field(b), field(c)
    D = -4 * b ** 3 - 27 * c ** 2
    if D == 0:
        raise DegenerateParametersError({1}, "limit curve needs D != 0")
    if b == 0:
        raise ValueError("limit curve needs b != 0")
    coeffs = [
        -b * c,
        4 * b / 3,
        4 * b * c / D,
        224 * b / (27 * D),
        16 * b * c / D ** 2,
        64 * b / (3 * D ** 2),
        -64 * b * c / D ** 3,
    ]
    return HyperellipticModel(UniPoly(field, coeffs))


def has_involution(model: HyperellipticModel, t) -> bool:
    """True when X -> t/X (with Y -> Y t^(3/2)/X^3) preserves the equation."""
    f = model.coeffs
    t = model.field(t)
    return all(f[i] * t ** i == f[6 - i] * t ** 3 for i in range(7))


# -- roots of g over the tower, and the two rational splittings -----------------


def _w_table(b, c, s):
    """R-part and 1-part of w1, w3 as (r^2, r, 1) coefficient triples, times 1/2."""
    w1_R = (-3 * s ** 2 - b, -4 * b * s - 6 * c, -b * s ** 2 - 6 * c * s + b ** 2)
    w3_R = (-3 * s ** 2 - b, 2 * b * s + 3 * c, -b * s ** 2 + 3 * c * s - b ** 2)
    w3_1 = (-6 * b * s - 9 * c, 9 * c * s - 2 * b ** 2, -4 * b ** 2 * s - 6 * b * c)
    return w1_R, w3_R, w3_1


def roots_w(p: FamilyParams, table=None) -> tuple[SplittingTower, tuple]:
    """The six roots w1..w6 of g in k[r, R], with w2 = -w1, w4 = -w3, w6 = -w5.

    ``table`` replaces the stored root table (same signature as ``_w_table``).
    """
    _require(p, (1, 3))
    tower = SplittingTower.depressed(p.field, p.b, p.c)
    half = p.field.one / 2
    w1_R, w3_R, w3_1 = (table or _w_table)(p.b, p.c, p.s)

    def make(one, rpart):
        coords = [x * half for x in reversed(one)] + [x * half for x in reversed(rpart)]
        return tower.element(coords)

    zero = (0, 0, 0)
    w1 = make(zero, w1_R)
    w3 = make(w3_1, w3_R)
    w5 = make(tuple(-x for x in w3_1), w3_R)
    return tower, (w1, -w1, w3, -w3, w5, -w5)


def check_roots_w(p: FamilyParams, table=None) -> bool:
    tower, w = roots_w(p, table)
    g = curve_C2(p).f
    X = UniPoly(tower, [0, 1])
    prod = UniPoly(tower, [g.lc])
    for wi in w:
        prod = prod * (X - wi)
    return all(c.is_scalar() for c in prod.coeffs) and UniPoly(
        p.field, [c.scalar() for c in prod.coeffs]
    ) == g


def q2(p: FamilyParams):
    """The cube root of the leading coefficient of g: 1 / ((4b^3+27c^2) f(s))."""
    e, _, fs, _ = condition_values(p)
    return 1 / (e * fs)


PAIRINGS = {
    "singular": ((1, 2), (3, 4), (5, 6)),
    "R1": ((1, 6), (2, 3), (4, 5)),
    "R2": ((1, 4), (2, 5), (3, 6)),
}


def family_splitting(p: FamilyParams, which: str = "R1") -> tuple:
    """The three quadratics of a named pairing, over the tower."""
    tower, w = roots_w(p)
    X = UniPoly(tower, [0, 1])
    lc = q2(p)
    return tuple((X - w[i - 1]) * (X - w[j - 1]) * lc for i, j in PAIRINGS[which])


def splitting_LR1(p: FamilyParams, which: str = "R1") -> QuadraticSplitting:
    """The rational pairing as (Q, h) with h = f: its tau-fixed quadratic is Q(r)."""
    quads = family_splitting(p, which)
    for F in quads:
        if not any(c.v for c in F.coeffs):
            Q = [list(c.u.c) for c in F.coeffs]
            return splitting_from_quadratic(Q, p.cubic(), curve_C2(p).f)
    raise ArithmeticError("no quadratic of the pairing is defined over k[r]")


def c4_via_richelot(p: FamilyParams, which: str = "R1") -> HyperellipticModel:
    """Richelot image of C2 along a rational pairing; the twist is disc(f) = D."""
    _require(p, (1, 2, 3, 4))
    return richelot(splitting_LR1(p, which)).codomain


# -- Kappe-Warren ----------------------------------------------------------------


def kappe_warren(B, D, field=QQ) -> tuple[str, int | None]:
    """Irreducibility of X^4 + B X^2 + D: ("irreducible", None) or ("reducible", i)."""
    B, D = field(B), field(D)
    quartic = UniPoly(field, [D, 0, B, 0, 1])
    if discriminant(quartic) == 0:
        raise ValueError("X^4 + B X^2 + D is not square-free")
    if field.is_square(B * B - 4 * D):
        return "reducible", 1
    if field.is_square(D):
        rD = field.sqrt(D)
        if field.is_square(-B + 2 * rD):
            return "reducible", 2
        if field.is_square(-B - 2 * rD):
            return "reducible", 3
    return "irreducible", None
