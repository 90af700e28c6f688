"""Richelot (2,2)-isogenies from quadratic splittings over a cubic etale algebra.

A splitting is stored as (h, Q): h a monic square-free cubic over k and Q a
quadratic in A[X], A = k[T]/(h), whose norm is f.  The three conjugates
F_j = Q(T_j) live over the splitting tower of h.  The codomain is
d Y~^2 = G1 G2 G3 with d = disc(h), stored as Y^2 = d G1 G2 G3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import scalar_to_str, field_from_json
from .etale import CubicEtale, SplittingTower, TowerElement, etale_norm
from .genus2 import HyperellipticModel, SingularCurveError
from .poly import UniPoly, discriminant, is_squarefree

__all__ = [
    "QuadraticSplitting",
    "RichelotImage",
    "TransferContext",
    "TransferDegenerate",
    "correspondence_transfer",
    "dual_quadratics",
    "is_frobenius_stable",
    "reverse_transfer",
    "richelot",
    "splitting_from_json",
    "transfer_context",
    "SplittingDeterminant",
    "SplittingError",
    "SingularSplittingError",
    "TowerSplitting",
    "enumerate_splittings",
    "richelot_codomain",
    "richelot_dual",
    "splitting_determinant",
    "splitting_from_quadratic",
    "tower_richelot",
]


class SplittingError(ValueError):
    """The data does not describe a quadratic splitting of f."""


class SingularSplittingError(ValueError):
    """delta = 0: the isogeny lands on a product of elliptic curves."""


@dataclass(frozen=True)
class QuadraticSplitting:
    h: UniPoly
    Q: UniPoly
    f: UniPoly
    tower: SplittingTower = dc_field(repr=False, compare=False)
    conjugates: tuple = dc_field(repr=False, compare=False)

    @property
    def field(self):
        return self.h.ring

    @property
    def algebra(self) -> CubicEtale:
        return self.tower.base

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "h": [scalar_to_str(c) for c in self.h.coeffs],
            "Q": [[scalar_to_str(a) for a in self.algebra(c).c] for c in self.Q.coeffs],
        }


def splitting_from_quadratic(Q, h: UniPoly, f: UniPoly | None = None) -> QuadraticSplitting:
    """Validate (Q, h) and, when ``f`` is given, check that Norm(Q) = f.

    ``Q`` may be a UniPoly over the cubic algebra or a list of T-coefficient
    lists (coefficient of X^0 first).
    """
    field = h.ring
    if h.degree != 3 or h.lc != 1:
        raise SplittingError("h must be a monic cubic")
    try:
        tower = SplittingTower(field, h)
    except ValueError as exc:
        raise SplittingError(str(exc)) from exc
    A = tower.base
    if not isinstance(Q, UniPoly):
        Q = UniPoly(A, [A(list(c)) for c in Q])
    else:
        Q = UniPoly(A, [A(c) for c in Q.coeffs])
    if Q.degree > 2 or Q.degree < 1:
        raise SplittingError("Q must have degree 1 or 2 in X")
    norm = etale_norm(Q, tower)
    if f is not None and norm != f:
        raise SplittingError("Norm(Q) does not equal f")
    conj = tuple(
        UniPoly(tower, [c(root) for c in Q.coeffs]) for root in tower.roots()
    )
    return QuadraticSplitting(h, Q, norm, tower, conj)


def splitting_from_json(obj: dict, f: UniPoly | None = None) -> QuadraticSplitting:
    field = f.ring if f is not None else field_from_json(obj["field"])
    h = UniPoly(field, [field(str(c)) for c in obj["h"]])
    Q = [[field(str(a)) for a in coeff] for coeff in obj["Q"]]
    return splitting_from_quadratic(Q, h, f)


@dataclass(frozen=True)
class SplittingDeterminant:
    delta: TowerElement
    delta_squared: object
    norm: object

    @property
    def is_singular(self) -> bool:
        return not self.delta


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def determinant_of(F1: UniPoly, F2: UniPoly, F3: UniPoly):
    return _det3([[F[0], F[1], F[2]] for F in (F1, F2, F3)])


def splitting_determinant(s: QuadraticSplitting) -> SplittingDeterminant:
    delta = determinant_of(*s.conjugates)
    sq = delta * delta
    if not sq.is_scalar():
        raise ArithmeticError("delta^2 does not lie in the base field")
    return SplittingDeterminant(delta, sq.scalar(), delta.norm())


def dual_quadratics(F1: UniPoly, F2: UniPoly, F3: UniPoly, delta) -> tuple[UniPoly, UniPoly, UniPoly]:
    """G_i = delta^-1 (F_j' F_k - F_k' F_j) for (i, j, k) cyclic."""
    inv = delta.inverse() if hasattr(delta, "inverse") else F1.ring.one / delta
    F = (F1, F2, F3)
    out = []
    for i in range(3):
        Fj, Fk = F[(i + 1) % 3], F[(i + 2) % 3]
        out.append((Fj.derivative() * Fk - Fk.derivative() * Fj) * inv)
    return tuple(out)


def _scalar_poly(p: UniPoly, field) -> UniPoly:
    try:
        return UniPoly(field, [c.scalar() for c in p.coeffs])
    except ValueError as exc:
        raise ArithmeticError("Richelot product has coefficients outside k") from exc


@dataclass(frozen=True)
class RichelotImage:
    codomain: HyperellipticModel
    g: UniPoly
    twist: object
    G: tuple
    determinant: SplittingDeterminant


def richelot(s: QuadraticSplitting) -> RichelotImage:
    det = splitting_determinant(s)
    if det.is_singular:
        raise SingularSplittingError("splitting determinant is zero")
    G = dual_quadratics(*s.conjugates, det.delta)
    g = _scalar_poly(G[0] * G[1] * G[2], s.field)
    d = discriminant(s.h)
    try:
        codomain = HyperellipticModel(g * d)
    except SingularCurveError as exc:
        raise SingularCurveError(f"Richelot codomain is singular: {exc}") from exc
    return RichelotImage(codomain, g, d, G, det)


def richelot_codomain(s: QuadraticSplitting) -> HyperellipticModel:
    return richelot(s).codomain


def richelot_dual(s: QuadraticSplitting) -> QuadraticSplitting:
    """The splitting {G1, G2, G3} of g over the same cubic algebra."""
    image = richelot(s)
    G1 = image.G[0]
    if any(c.v for c in G1.coeffs):
        raise ArithmeticError("G1 is not defined over k[T]/(h)")
    Q = [list(c.u.c) for c in G1.coeffs]
    return splitting_from_quadratic(Q, s.h, image.g)


# -- splittings over an explicit tower (all roots known) ---------------------


@dataclass(frozen=True)
class TowerSplitting:
    """A pairing of the six roots into three quadratics over a splitting tower."""

    pairing: tuple
    quadratics: tuple
    rational: bool
    singular: bool
    delta: TowerElement


def _pairings(n=6):
    items = list(range(n))

    def rec(rest):
        if not rest:
            yield ()
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for tail in rec(rest[1:i] + rest[i + 1:]):
                yield ((a, b),) + tail

    return sorted(rec(items))


def enumerate_splittings(roots, lc_cuberoot, tower: SplittingTower) -> list[TowerSplitting]:
    """All 15 pairings of six tower roots, with rationality and singularity flags.

    A pairing is rational when the elementary symmetric functions of its three
    quadratics have base-field coefficients.
    """
    X = UniPoly(tower, [0, 1])
    out = []
    for pairing in _pairings(len(roots)):
        quads = tuple(
            (X - roots[i]) * (X - roots[j]) * lc_cuberoot for i, j in pairing
        )
        F1, F2, F3 = quads
        sym = (F1 + F2 + F3, F1 * F2 + F2 * F3 + F3 * F1, F1 * F2 * F3)
        rational = all(c.is_scalar() for p in sym for c in p.coeffs)
        delta = determinant_of(*quads)
        out.append(
            TowerSplitting(
                tuple((i + 1, j + 1) for i, j in pairing),
                quads,
                rational,
                not delta,
                delta,
            )
        )
    return out


def tower_richelot(quadratics, field, twist=None) -> RichelotImage:
    """Richelot image for three quadratics given directly over a tower.

    The sextic g must come out with base-field coefficients; ``twist`` is the
    class d of the codomain d Y^2 = g (defaults to 1).
    """
    delta = determinant_of(*quadratics)
    if not delta:
        raise SingularSplittingError("splitting determinant is zero")
    sq = delta * delta
    G = dual_quadratics(*quadratics, delta)
    g = _scalar_poly(G[0] * G[1] * G[2], field)
    d = field.one if twist is None else field(twist)
    det = SplittingDeterminant(delta, sq.scalar() if sq.is_scalar() else None, delta.norm())
    return RichelotImage(HyperellipticModel(g * d), g, d, G, det)


# -- point transfer along the Richelot correspondence ----------------------------


class TransferDegenerate(ValueError):
    """The quadratic in X~ lost its leading term; retry with another point."""


@dataclass(frozen=True)
class TransferContext:
    """A splitting specialized to a finite field K in which h splits.

    ``F`` and ``G`` are the conjugate quadratics over K and ``sqrt_d`` is
    (T1 - T2)(T2 - T3)(T3 - T1), a square root of d = disc(h) in K.
    """

    K: object
    F: tuple
    G: tuple
    sqrt_d: object
    d: object
    codomain: HyperellipticModel
    domain: UniPoly


def transfer_context(s: QuadraticSplitting) -> TransferContext:
    """Specialize the splitting to a finite field K where h splits.

    When h has a root in F_p, K = F_{p^2} and that root is labelled T3, so
    Frobenius fixes F3 and at most swaps F1 and F2; this is the labelling for
    which the correspondence is defined over F_p.  Otherwise K = F_{p^6}.
    The tower embeds by r -> T1, R -> T2 - T3.
    """
    from .finite_field import GF, poly_roots

    field = s.field
    if not hasattr(field, "p"):
        raise TypeError("point transfer runs over finite fields only")
    rational = poly_roots(s.h)
    K = GF(field.p, 2 if rational else 6)
    roots = poly_roots(UniPoly(K, list(s.h.coeffs)))
    if len(roots) != 3:
        raise ArithmeticError(f"h does not split over {K!r}")
    if rational:
        t3 = K(rational[0])
        t1, t2 = [t for t in roots if t != t3]
    else:
        t1, t2, t3 = roots
    R = t2 - t3

    def embed(x: TowerElement):
        return x.u(t1) + x.v(t1) * R

    image = richelot(s)
    F = tuple(UniPoly(K, [embed(c) for c in P.coeffs]) for P in s.conjugates)
    G = tuple(UniPoly(K, [embed(c) for c in P.coeffs]) for P in image.G)
    sqrt_d = (t1 - t2) * (t2 - t3) * (t3 - t1)
    d = K(image.twist)
    if sqrt_d * sqrt_d != d:
        raise ArithmeticError("root product does not square to disc(h)")
    return TransferContext(K, F, G, sqrt_d, d, image.codomain, s.f)


def _on_curve(poly: UniPoly, x, y) -> bool:
    return y * y == poly(x)


def correspondence_transfer(ctx: TransferContext, x, y, twisted: bool = True) -> list:
    """Images of the affine point (x, y) of Y^2 = f(X) on the codomain.

    Solves F1(x) G1(X~) + F2(x) G2(X~) = 0, then F1(x) G1(X~)(x - X~) = sqrt(d) Y~ y.
    Points are returned on the stored model Y'^2 = d g(X), Y' = d Y~.  With
    ``twisted=False`` the naive choice sqrt(d) = 1 is used and points are
    returned on Y^2 = g(X) instead.
    """
    K = ctx.K
    x, y = K(x), K(y)
    if not _on_curve(ctx.domain.map_coeffs(K, K), x, y):
        raise ValueError("point is not on the domain curve")
    F1, F2, F3 = ctx.F
    G1, G2, G3 = ctx.G
    a1, a2 = F1(x), F2(x)
    eq = G1 * a1 + G2 * a2
    if eq.degree < 2:
        raise TransferDegenerate("leading coefficient of the transfer quadratic vanishes")
    from .finite_field import quadratic_roots

    g = ctx.codomain.f.map_coeffs(K, K)
    scale = ctx.d if twisted else K.one
    target = g if twisted else UniPoly(K, [c / ctx.d for c in g.coeffs])
    out = []
    for xt in quadratic_roots(eq):
        if y:
            lhs = a1 * G1(xt) * (x - xt)
            yt = lhs / ((ctx.sqrt_d if twisted else K.one) * y)
            if twisted and F2(x) * G2(xt) * (x - xt) != -ctx.sqrt_d * yt * y:
                raise ArithmeticError("third correspondence equation fails")
            candidates = [yt * scale]
        else:
            val = target(xt)
            if not K.is_square(val):
                continue
            r = K.sqrt(val)
            candidates = [r] if not r else [r, -r]
        for yt in candidates:
            if not _on_curve(target, xt, yt):
                raise ArithmeticError("transferred point is not on the codomain")
            out.append((xt, yt))
    return out


def reverse_transfer(ctx: TransferContext, xt, yt) -> list:
    """Preimages on Y^2 = f(X) of a point (xt, yt) of the stored codomain model."""
    from .finite_field import quadratic_roots

    K = ctx.K
    xt, yt = K(xt), K(yt)
    F1, F2, _ = ctx.F
    G1, G2, _ = ctx.G
    b1, b2 = G1(xt), G2(xt)
    eq = F1 * b1 + F2 * b2
    if eq.degree < 2:
        raise TransferDegenerate("leading coefficient of the reverse quadratic vanishes")
    f = ctx.domain.map_coeffs(K, K)
    ytilde = yt / ctx.d
    out = []
    for x in quadratic_roots(eq):
        if ytilde:
            ys = [F1(x) * b1 * (x - xt) / (ctx.sqrt_d * ytilde)]
        else:
            val = f(x)
            if not K.is_square(val):
                continue
            r = K.sqrt(val)
            ys = [r] if not r else [r, -r]
        for y in ys:
            if _on_curve(f, x, y):
                out.append((x, y))
    return out


def is_frobenius_stable(points, p: int) -> bool:
    """True when the set of points is mapped to itself by x -> x^p."""
    pts = set(points)
    return all((X ** p, Y ** p) in pts for X, Y in pts)
