"""Self-test suite: the structural identities of the family, checked by name.

``quick`` evaluates every identity at random points mod 6-digit primes.
``full`` adds exact checks over Q: symbolic in Q(b, c, s) where that is
cheap, and at fixed rational points otherwise.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import QQ, PrimeField, SeededSampler
from .bolza import BolzaParams, cover_is_square
from .family import (
    DegenerateParametersError,
    FamilyParams,
    c2_coefficients,
    c4_disc_closed_form,
    check_roots_w,
    condition_values,
    curve_C2_composed,
    curve_C4,
    degeneracy_flags,
    derive_params,
    splitting_LR1,
)
from .genus2 import absolute_invariants, igusa_invariants, sextic_discriminant
from .multipoly import IDENTITY_PRIMES, RationalFunctionField
from .poly import UniPoly
from .richelot import richelot, splitting_determinant

__all__ = ["IDENTITIES", "IdentityResult", "run_selftest"]

# Rational points used by the exact level (all nondegenerate).
EXACT_POINTS = [(1, 1, 1), (2, 3, 5), (-1, 2, 3), (Fraction(1, 2), -3, Fraction(2, 3))]


def square_identity(p: FamilyParams) -> bool:
    try:
        derive_params(p)
    except ArithmeticError:
        return False
    return True


def route_equality(p: FamilyParams) -> bool:
    return curve_C2_composed(p) == UniPoly(p.field, c2_coefficients(p))


def root_table(p: FamilyParams, table=None) -> bool:
    return check_roots_w(p, table)


def norm_delta(p: FamilyParams) -> bool:
    """delta^2 = -(2)^2 / ((1)^3 f(s)^6) and N(delta) = -(delta^2)^3 for (L:R1)."""
    det = splitting_determinant(splitting_LR1(p))
    e, n, fs, _ = condition_values(p)
    return det.delta_squared == -n ** 2 / (e ** 3 * fs ** 6) and det.norm == -det.delta_squared ** 3


def disc_F(p: FamilyParams) -> bool:
    model, _ = curve_C4(p)
    return sextic_discriminant(model.f) == c4_disc_closed_form(p)


def reflection(p: FamilyParams) -> bool:
    g1 = richelot(splitting_LR1(p, "R1")).g
    g2 = richelot(splitting_LR1(p, "R2")).g
    return g2 == g1.reflect()


def weighted_scaling(p: FamilyParams, lam=3) -> bool:
    def inv(q):
        return absolute_invariants(igusa_invariants(curve_C4(q)[0]))

    return inv(p) == inv(p.scaled(lam))


def bolza_covers(q: BolzaParams) -> bool:
    return all(cover_is_square(q))


@dataclass(frozen=True)
class Identity:
    name: str
    check: Callable
    kind: str = "family"  # or "bolza"
    symbolic: bool = False


IDENTITIES = [
    Identity("square-identity", square_identity, symbolic=True),
    Identity("route-equality", route_equality, symbolic=True),
    Identity("root-table", root_table),
    Identity("norm-delta", norm_delta),
    Identity("disc-F", disc_F),
    Identity("reflection", reflection),
    Identity("bolza-covers", bolza_covers, kind="bolza"),
    Identity("weighted-scaling", weighted_scaling),
]


@dataclass
class IdentityResult:
    name: str
    passed: bool
    mode: str
    trials: int
    seconds: float
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "mode": self.mode,
            "trials": self.trials,
            "seconds": round(self.seconds, 3),
            "detail": self.detail,
        }


def _random_params(ident: Identity, field, sampler: SeededSampler, index: int):
    draw = [field(sampler.integer(index, field.p, stream=k)) for k in range(3)]
    if ident.kind == "bolza":
        q = BolzaParams(*draw, field)
        if q.denominator == 0 or q.lam == 0:
            return None
        return q
    p = FamilyParams(*draw, field)
    return None if degeneracy_flags(p) else p


def _call(ident: Identity, params, table):
    if ident.name == "root-table":
        return ident.check(params, table)
    return ident.check(params)


def _run_modular(ident: Identity, trials: int, seed: int, table) -> IdentityResult:
    start = time.perf_counter()
    sampler = SeededSampler(seed)
    done = index = 0
    while done < trials:
        field = PrimeField(IDENTITY_PRIMES[done % len(IDENTITY_PRIMES)])
        params = _random_params(ident, field, sampler, index)
        index += 1
        if params is None:
            continue
        if index > 50 * trials:
            return IdentityResult(ident.name, False, "mod-p", done, time.perf_counter() - start,
                                  "too many points skipped as degenerate")
        try:
            ok = _call(ident, params, table)
        except (ZeroDivisionError, DegenerateParametersError):
            continue
        except Exception as exc:  # any other error is a failure of the identity
            ok, why = False, f"{type(exc).__name__}: {exc}"
        else:
            why = "values differ"
        if not ok:
            return IdentityResult(ident.name, False, "mod-p", done + 1, time.perf_counter() - start,
                                  f"{why} at {params.to_json()}")
        done += 1
    return IdentityResult(ident.name, True, "mod-p", trials, time.perf_counter() - start)


def _run_exact(ident: Identity, table) -> IdentityResult:
    start = time.perf_counter()
    if ident.symbolic:
        F = RationalFunctionField(3)
        params = [FamilyParams(*F.gens(), F)]
        mode = "symbolic"
    elif ident.kind == "bolza":
        params = [BolzaParams(*pt, QQ) for pt in [(1, 2, 5), (2, -1, 3), (3, 1, 1)]]
        mode = "exact-points"
    else:
        params = [FamilyParams(*pt, QQ) for pt in EXACT_POINTS]
        mode = "exact-points"
    for prm in params:
        try:
            ok = _call(ident, prm, table)
        except Exception as exc:  # reported, not raised
            return IdentityResult(ident.name, False, mode, len(params), time.perf_counter() - start,
                                  f"{type(exc).__name__}: {exc}")
        if not ok:
            return IdentityResult(ident.name, False, mode, len(params), time.perf_counter() - start,
                                  f"fails at {prm.to_json() if mode != 'symbolic' else 'generic point'}")
    return IdentityResult(ident.name, True, mode, len(params), time.perf_counter() - start)


def run_selftest(level: str = "quick", seed: int = 0, trials: int = 20, table=None) -> list[IdentityResult]:
    """Run every identity; ``table`` overrides the stored root table (fault injection)."""
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    results = [_run_modular(ident, trials, seed, table) for ident in IDENTITIES]
    if level == "full":
        results += [_run_exact(ident, table) for ident in IDENTITIES]
    return results
