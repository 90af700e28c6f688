"""Interpolating the weighted-degree relation L4 among absolute invariants.

Samples of (i1, i2, i3) on the (4,4)-split family are drawn mod p with b = 1,
the evaluation matrix over the monomial basis i1^e1 i2^e2 i3^e3 with
2 e1 + 3 e2 + 5 e3 <= W is built, and its one-dimensional right nullspace is
the relation mod p.  Relations at several primes are combined by CRT and
rational reconstruction into a primitive integer relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import PrimeField, SeededSampler, crt_combine, rational_reconstruct, sample_scalar
from .family import DegenerateParametersError, FamilyParams, curve_C4, degeneracy_flags
from .genus2 import AbsoluteInvariants, SingularCurveError, absolute_invariants, igusa_invariants
from .linalg import nullspace_mod_p

__all__ = [
    "DEFAULT_MARGIN",
    "REFERENCE_TERM_COUNT",
    "WEIGHTS",
    "ModularRelation",
    "NullspaceDimensionError",
    "ReconstructedSurface",
    "ReconstructionError",
    "basis_count_report",
    "combine_primes",
    "cross_validate",
    "evaluation_matrix",
    "interpolate_mod_p",
    "membership",
    "monomial_basis",
    "parse_relation",
    "sample_family",
    "sample_invariants",
]

WEIGHTS = (2, 3, 5)
DEFAULT_MARGIN = 64
# Number of monomials reported for the published degree-90 relation.
REFERENCE_TERM_COUNT = 4574


def weight(e: Sequence[int]) -> int:
    return sum(w * k for w, k in zip(WEIGHTS, e))


def monomial_basis(max_weight: int) -> list[tuple[int, int, int]]:
    """All (e1, e2, e3) with 2 e1 + 3 e2 + 5 e3 <= max_weight, in lex order."""
    if max_weight < 0:
        raise ValueError("max_weight must be non-negative")
    out = []
    for e1 in range(max_weight // 2 + 1):
        for e2 in range((max_weight - 2 * e1) // 3 + 1):
            for e3 in range((max_weight - 2 * e1 - 3 * e2) // 5 + 1):
                out.append((e1, e2, e3))
    return out


def basis_count_report(max_weight: int = 90) -> dict:
    count = len(monomial_basis(max_weight))
    exact = sum(1 for e in monomial_basis(max_weight) if weight(e) == max_weight)
    return {
        "max_weight": max_weight,
        "count_at_most": count,
        "count_exact": exact,
        "reference": REFERENCE_TERM_COUNT,
        "matches_reference": count == REFERENCE_TERM_COUNT,
    }


# -- sampling --------------------------------------------------------------------


def sample_family(p: int, sampler: SeededSampler, n: int, stats: dict | None = None):
    """Yield n accepted (FamilyParams, AbsoluteInvariants) pairs with b = 1.

    Draw i uses sampler indices (i, stream 0) for c and (i, stream 1) for s.
    When ``stats`` is given, its "attempts" and "accepted" counts are kept current.
    """
    field = PrimeField(p)
    accepted = attempts = 0
    index = 0
    while accepted < n:
        attempts += 1
        if attempts >= 100 and accepted < attempts // 100:
            raise RuntimeError(f"rejection rate above 99% after {attempts} draws")
        c = sample_scalar(sampler, index, field, stream=0)
        s = sample_scalar(sampler, index, field, stream=1)
        index += 1
        params = FamilyParams(field.one, c, s, field)
        if degeneracy_flags(params):
            continue
        try:
            model, _ = curve_C4(params)
            inv = absolute_invariants(igusa_invariants(model))
        except (SingularCurveError, DegenerateParametersError, ZeroDivisionError):
            continue
        accepted += 1
        if stats is not None:
            stats.update(attempts=attempts, accepted=accepted)
        yield params, inv


def sample_invariants(p: int, sampler: SeededSampler, n: int, stats: dict | None = None) -> list[AbsoluteInvariants]:
    return [inv for _, inv in sample_family(p, sampler, n, stats)]


def _power_table(values: np.ndarray, top: int, p: int) -> np.ndarray:
    out = np.empty((values.shape[0], top + 1), dtype=np.int64)
    out[:, 0] = 1
    for k in range(1, top + 1):
        out[:, k] = out[:, k - 1] * values % p
    return out


def evaluation_matrix(samples: Sequence, basis: Sequence[tuple], p: int) -> np.ndarray:
    """Rows: samples; columns: monomials of the basis; entries mod p (float64)."""
    vals = np.array([[int(x) for x in t] for t in samples], dtype=np.int64).reshape(-1, 3)
    exps = np.array(basis, dtype=np.int64).reshape(-1, 3)
    tables = [_power_table(vals[:, k], int(exps[:, k].max(initial=0)), p) for k in range(3)]
    m = tables[0][:, exps[:, 0]] * tables[1][:, exps[:, 1]] % p
    m = m * tables[2][:, exps[:, 2]] % p
    return m.astype(np.float64)


# -- modular relations ----------------------------------------------------------


class NullspaceDimensionError(ValueError):
    def __init__(self, dimension: int):
        self.dimension = dimension
        if dimension == 0:
            msg = "nullspace is trivial: no relation in this basis"
        else:
            msg = f"nullspace has dimension {dimension}: too few independent samples"
        super().__init__(msg)


def _header(max_weight: int, n: int) -> str:
    return f"weights {' '.join(map(str, WEIGHTS))} maxdeg {max_weight} basis {n}"


@dataclass(frozen=True)
class ModularRelation:
    p: int
    max_weight: int
    coeffs: tuple  # ints in [0, p), indexed like monomial_basis(max_weight)
    pivot: int

    @property
    def basis(self) -> list[tuple]:
        return monomial_basis(self.max_weight)

    @classmethod
    def from_vector(cls, p: int, max_weight: int, vec, pivot: int | None = None) -> "ModularRelation":
        vec = [int(x) % p for x in vec]
        if pivot is None:
            pivot = next((i for i, x in enumerate(vec) if x), None)
            if pivot is None:
                raise ValueError("zero vector is not a relation")
        if vec[pivot] == 0:
            raise ValueError(f"coefficient at pivot {pivot} vanishes mod {p}")
        inv = pow(vec[pivot], -1, p)
        return cls(p, max_weight, tuple(x * inv % p for x in vec), pivot)

    def renormalized(self, pivot: int) -> "ModularRelation":
        return ModularRelation.from_vector(self.p, self.max_weight, self.coeffs, pivot)

    def evaluate(self, invariants) -> int:
        p = self.p
        x = [int(v) % p for v in invariants]
        total = 0
        for (e1, e2, e3), c in zip(self.basis, self.coeffs):
            if c:
                total += c * pow(x[0], e1, p) * pow(x[1], e2, p) * pow(x[2], e3, p)
        return total % p

    def to_text(self) -> str:
        lines = [f"mod {self.p} {_header(self.max_weight, len(self.coeffs))}"]
        lines += [f"{e1} {e2} {e3} {c}" for (e1, e2, e3), c in zip(self.basis, self.coeffs) if c]
        return "\n".join(lines) + "\n"

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c)


def interpolate_mod_p(p: int, samples: Sequence, max_weight: int = 90, margin: int = DEFAULT_MARGIN) -> ModularRelation:
    basis = monomial_basis(max_weight)
    if len(samples) < len(basis) + margin:
        raise ValueError(f"need at least {len(basis) + margin} samples, got {len(samples)}")
    null = nullspace_mod_p(evaluation_matrix(samples, basis, p), p)
    if len(null) != 1:
        raise NullspaceDimensionError(len(null))
    return ModularRelation.from_vector(p, max_weight, null[0])


# -- integer relations -------------------------------------------------------------


@dataclass(frozen=True)
class ReconstructedSurface:
    max_weight: int
    coeffs: tuple  # primitive integers; None where reconstruction failed
    primes: tuple
    pivot: int
    failures: tuple = ()

    @property
    def basis(self) -> list[tuple]:
        return monomial_basis(self.max_weight)

    @property
    def complete(self) -> bool:
        return not self.failures

    def evaluate(self, invariants):
        """Exact value at rational invariants, or mod p for F_p invariants."""
        if not self.complete:
            raise ValueError("relation has unreconstructed coefficients")
        field = getattr(invariants[0], "field", None)
        if field is not None:
            p = field.p
            x = [int(v) for v in invariants]
            return sum(
                c * pow(x[0], e1, p) * pow(x[1], e2, p) * pow(x[2], e3, p)
                for (e1, e2, e3), c in zip(self.basis, self.coeffs) if c
            ) % p
        x = [Fraction(v) for v in invariants]
        return sum(c * x[0] ** e1 * x[1] ** e2 * x[2] ** e3 for (e1, e2, e3), c in zip(self.basis, self.coeffs) if c)

    def to_text(self) -> str:
        if not self.complete:
            raise ValueError("cannot serialize an incomplete reconstruction")
        lines = [f"L4 v1 {_header(self.max_weight, len(self.coeffs))}"]
        lines += [f"{e1} {e2} {e3} {c}" for (e1, e2, e3), c in zip(self.basis, self.coeffs) if c]
        return "\n".join(lines) + "\n"

    @property
    def max_digits(self) -> int:
        return max((len(str(abs(c))) for c in self.coeffs if c), default=0)


class ReconstructionError(ValueError):
    def __init__(self, surface: ReconstructedSurface):
        self.surface = surface
        super().__init__(
            f"{len(surface.failures)} of {len(surface.coeffs)} coefficients did not reconstruct"
            f" from {len(surface.primes)} prime(s)"
        )


def _common_pivot(relations: Sequence[ModularRelation]) -> int:
    n = len(relations[0].coeffs)
    for i in range(n):
        if all(r.coeffs[i] for r in relations):
            return i
    raise ValueError("no monomial has a nonzero coefficient at every prime")


def _reconstruct(residues: list[tuple[int, int]]) -> Fraction | None:
    """Rational reconstruction that must agree when the last prime is held out."""
    value, modulus = crt_combine(residues)
    q = rational_reconstruct(value, modulus)
    if q is None or len(residues) < 2:
        return None
    v2, m2 = crt_combine(residues[:-1])
    q2 = rational_reconstruct(v2, m2)
    return q if q2 == q else None


def combine_primes(relations: Sequence[ModularRelation], allow_partial: bool = False) -> ReconstructedSurface:
    """CRT + rational reconstruction across primes, to a primitive integer vector.

    A coefficient is accepted only if reconstruction from all primes agrees
    with reconstruction from all primes but the last; a lone prime therefore
    never yields a coefficient.
    """
    if not relations:
        raise ValueError("no relations to combine")
    max_weight = relations[0].max_weight
    if any(r.max_weight != max_weight for r in relations):
        raise ValueError("relations use different bases")
    primes = [r.p for r in relations]
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be pairwise distinct")
    pivot = _common_pivot(relations)
    rels = [r.renormalized(pivot) for r in relations]
    fracs: list = []
    failures = []
    for i in range(len(rels[0].coeffs)):
        q = _reconstruct([(r.coeffs[i], r.p) for r in rels])
        if q is None:
            failures.append(i)
        fracs.append(q)
    good = [q for q in fracs if q is not None]
    den = math.lcm(*(q.denominator for q in good)) if good else 1
    ints = [None if q is None else int(q * den) for q in fracs]
    g = math.gcd(*(x for x in ints if x is not None)) or 1
    sign = -1 if (ints[pivot] is not None and ints[pivot] < 0) else 1
    ints = tuple(None if x is None else sign * x // g for x in ints)
    surface = ReconstructedSurface(max_weight, ints, tuple(primes), pivot, tuple(failures))
    if failures and not allow_partial:
        raise ReconstructionError(surface)
    return surface


def cross_validate(relations: Sequence[ModularRelation], subsets: Iterable[Sequence[int]]) -> dict:
    """Reconstruct from several prime subsets and compare the shared coefficients.

    Returns the indices reconstructed by every subset and whether they agree
    after scaling to the common pivot (rational values, not the primitive form).
    """
    pivot = _common_pivot(relations)
    rels = [r.renormalized(pivot) for r in relations]
    results = []
    for subset in subsets:
        chosen = [rels[i] for i in subset]
        results.append([_reconstruct([(r.coeffs[j], r.p) for r in chosen]) for j in range(len(rels[0].coeffs))])
    n = len(rels[0].coeffs)
    shared = [j for j in range(n) if all(res[j] is not None for res in results)]
    consistent = all(len({res[j] for res in results}) == 1 for j in shared)
    return {"pivot": pivot, "shared": shared, "consistent": consistent}


# -- membership and text format ----------------------------------------------------


def membership(relation, invariants) -> bool:
    if isinstance(relation, ModularRelation):
        field = getattr(invariants[0], "field", None)
        if field is not None and field.p != relation.p:
            raise ValueError("invariants live in a different prime field")
    return relation.evaluate(invariants) == 0


def parse_relation(text: str):
    """Inverse of ``to_text`` for both relation kinds."""
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty relation file")
    head = lines[0].split()
    try:
        if head[:2] == ["L4", "v1"]:
            kind, rest = "L4", head[2:]
        elif head[0] == "mod":
            kind, p, rest = "mod", int(head[1]), head[2:]
        else:
            raise ValueError
        if rest[:4] != ["weights"] + [str(w) for w in WEIGHTS] or rest[4] != "maxdeg" or rest[6] != "basis":
            raise ValueError
        max_weight, n = int(rest[5]), int(rest[7])
    except (ValueError, IndexError):
        raise ValueError(f"bad relation header: {lines[0]!r}") from None
    basis = monomial_basis(max_weight)
    if n != len(basis):
        raise ValueError(f"basis size {n} does not match max weight {max_weight}")
    index = {e: i for i, e in enumerate(basis)}
    coeffs = [0] * n
    for line in lines[1:]:
        e1, e2, e3, c = line.split()
        key = (int(e1), int(e2), int(e3))
        if key not in index:
            raise ValueError(f"monomial {key} outside the basis")
        coeffs[index[key]] = int(c)
    pivot = next((i for i, c in enumerate(coeffs) if c), None)
    if pivot is None:
        raise ValueError("relation has no terms")
    if kind == "mod":
        return ModularRelation(p, max_weight, tuple(coeffs), pivot)
    return ReconstructedSurface(max_weight, tuple(coeffs), (), pivot)
