"""Command-line interface: JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 2 degenerate or singular input, 3 input error,
4 trivial nullspace, 5 nullspace of dimension >= 2, 6 reconstruction failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import QQ, PrimeField, SeededSampler, field_from_json, is_probable_prime, scalar_to_str
from .family import (
    DegenerateParametersError,
    FamilyParams,
    curve_C2,
    curve_C4,
    curve_E2,
    degeneracy_flags,
)
from .genus2 import HyperellipticModel, SingularCurveError, absolute_invariants, igusa_invariants
from .humbert import (
    DEFAULT_MARGIN,
    ModularRelation,
    NullspaceDimensionError,
    ReconstructionError,
    basis_count_report,
    combine_primes,
    interpolate_mod_p,
    membership,
    monomial_basis,
    parse_relation,
    sample_invariants,
)
from .identities import run_selftest
from .poly import UniPoly
from .richelot import SingularSplittingError, SplittingError, richelot, splitting_determinant, splitting_from_json

EXIT_OK, EXIT_DEGENERATE, EXIT_INPUT, EXIT_DIM0, EXIT_DIMN, EXIT_RECON = 0, 2, 3, 4, 5, 6


class CliError(Exception):
    def __init__(self, code: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.code = code
        self.payload = payload


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _field(args, default=None):
    if getattr(args, "field", None) is None:
        return default if default is not None else QQ
    if args.field == "q":
        return QQ
    if args.prime is None:
        raise CliError(EXIT_INPUT, "--field fp needs --prime")
    return _prime_field(args.prime)


def _prime_field(p: int) -> PrimeField:
    if p <= 3 or not is_probable_prime(p):
        raise CliError(EXIT_INPUT, f"{p} is not a prime > 3")
    return PrimeField(p)


def _load_json(path: str) -> dict:
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from None
    if not isinstance(obj, dict):
        raise CliError(EXIT_INPUT, f"{path}: expected a JSON object")
    return obj


def _load_curve(path: str, field=None) -> HyperellipticModel:
    obj = _load_json(path)
    try:
        field = field or field_from_json(obj.get("field", {"kind": "Q"}))
        coeffs = obj["coeffs"]
        if not isinstance(coeffs, list) or len(coeffs) > 7:
            raise ValueError("coeffs must be a list of at most 7 entries")
        f = UniPoly(field, [field(str(c)) for c in coeffs])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, f"bad curve JSON: {exc}") from None
    try:
        return HyperellipticModel(f)
    except SingularCurveError as exc:
        raise CliError(EXIT_DEGENERATE, f"singular curve: {exc}") from None
    except ValueError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None


def _invariants_json(model: HyperellipticModel) -> dict:
    igusa = igusa_invariants(model)
    out = {"igusa": igusa.to_json()}
    try:
        out["absolute"] = absolute_invariants(igusa).to_json()
    except ZeroDivisionError:
        out["absolute"] = None
    return out


# -- subcommands -------------------------------------------------------------------


def cmd_invariants(args) -> int:
    field = _field(args) if args.field else None
    model = _load_curve(args.curve, field)
    out = {"curve": model.to_json()}
    out.update(_invariants_json(model))
    _emit(out)
    return EXIT_OK


def cmd_family(args) -> int:
    field = _field(args)
    try:
        p = FamilyParams(field(args.b), field(args.c), field(args.s), field)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, f"bad parameters: {exc}") from None
    flags = sorted(degeneracy_flags(p))
    out = {"params": p.to_json(), "flags": flags}
    if not ({1, 3} & set(flags)):
        out["C2"] = curve_C2(p).to_json()
        out["E2"] = [scalar_to_str(c) for c in curve_E2(p).coeffs]
    if flags:
        _emit(out)
        print(f"degenerate parameters: condition(s) {', '.join(f'({i})' for i in flags)}", file=sys.stderr)
        return EXIT_DEGENERATE
    c4, _ = curve_C4(p)
    out["C4"] = c4.to_json()
    out["C4_degree"] = c4.f.degree
    out["invariants"] = _invariants_json(c4)
    _emit(out)
    return EXIT_OK


def cmd_richelot(args) -> int:
    curve = _load_curve(args.curve)
    obj = _load_json(args.splitting)
    try:
        s = splitting_from_json(obj, curve.f)
    except SplittingError as exc:
        raise CliError(EXIT_INPUT, f"bad splitting: {exc}") from None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_INPUT, f"bad splitting JSON: {exc}") from None
    det = splitting_determinant(s)
    info = {"delta_squared": scalar_to_str(det.delta_squared), "norm_delta": scalar_to_str(det.norm)}
    try:
        image = richelot(s)
    except (SingularSplittingError, SingularCurveError) as exc:
        info["delta_is_zero"] = det.is_singular
        _emit(info)
        raise CliError(EXIT_DEGENERATE, f"singular splitting: {exc}") from None
    info.update({
        "codomain": image.codomain.to_json(),
        "g": [scalar_to_str(c) for c in image.g.coeffs],
        "twist": scalar_to_str(image.twist),
    })
    _emit(info)
    return EXIT_OK


def _basis_check(max_weight: int) -> dict:
    report = basis_count_report(max_weight)
    if max_weight == 90 and not report["matches_reference"]:
        print(
            f"basis-count finding: {report['count_at_most']} monomials of weight <= 90"
            f" ({report['count_exact']} of weight exactly 90); reference count {report['reference']}",
            file=sys.stderr,
        )
    return report


def cmd_humbert_interpolate(args) -> int:
    field = _prime_field(args.prime)
    basis = monomial_basis(args.max_weight)
    report = _basis_check(args.max_weight)
    n = args.samples if args.samples is not None else len(basis) + DEFAULT_MARGIN
    if n < len(basis) + DEFAULT_MARGIN:
        raise CliError(EXIT_INPUT, f"--samples {n} is below basis size {len(basis)} + margin {DEFAULT_MARGIN}")
    samples = sample_invariants(field.p, SeededSampler(args.seed), n)
    try:
        rel = interpolate_mod_p(field.p, samples, args.max_weight)
    except NullspaceDimensionError as exc:
        _emit({"prime": field.p, "samples": n, "basis": len(basis), "nullspace_dimension": exc.dimension})
        raise CliError(EXIT_DIM0 if exc.dimension == 0 else EXIT_DIMN, str(exc)) from None
    with open(args.out, "w") as fh:
        fh.write(rel.to_text())
    _emit({
        "prime": field.p,
        "seed": args.seed,
        "samples": n,
        "basis": len(basis),
        "basis_report": report,
        "nullspace_dimension": 1,
        "terms": rel.term_count,
        "pivot": list(rel.basis[rel.pivot]),
        "out": args.out,
    })
    return EXIT_OK


def _read_relation(path: str):
    try:
        with open(path) as fh:
            return parse_relation(fh.read())
    except (OSError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read relation {path}: {exc}") from None


def cmd_humbert_membership(args) -> int:
    rel = _read_relation(args.relation)
    if isinstance(rel, ModularRelation):
        if args.prime is not None and args.prime != rel.p:
            raise CliError(EXIT_INPUT, f"relation is mod {rel.p}, not mod {args.prime}")
        field = PrimeField(rel.p)
    else:
        field = _prime_field(args.prime) if args.prime is not None else QQ
    try:
        if args.triple is not None:
            triple = [field(x) for x in args.triple]
        elif args.family is not None:
            p = FamilyParams(*(field(x) for x in args.family), field)
            triple = list(absolute_invariants(igusa_invariants(curve_C4(p)[0])))
        elif args.curve is not None:
            triple = list(absolute_invariants(igusa_invariants(_load_curve(args.curve, field))))
        else:
            raise CliError(EXIT_INPUT, "give one of --triple, --family, --curve")
    except DegenerateParametersError as exc:
        raise CliError(EXIT_DEGENERATE, str(exc)) from None
    except ZeroDivisionError:
        raise CliError(EXIT_DEGENERATE, "I2 = 0: absolute invariants undefined") from None
    except (ValueError, TypeError) as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None
    _emit({"invariants": [scalar_to_str(x) for x in triple], "member": membership(rel, triple)})
    return EXIT_OK


def cmd_humbert_combine(args) -> int:
    rels = [_read_relation(path) for path in args.relations]
    if not all(isinstance(r, ModularRelation) for r in rels):
        raise CliError(EXIT_INPUT, "combine takes mod-p relation files")
    try:
        surface = combine_primes(rels)
    except ReconstructionError as exc:
        s = exc.surface
        basis = s.basis
        _emit({
            "primes": list(s.primes),
            "reconstructed": len(s.coeffs) - len(s.failures),
            "failed": len(s.failures),
            "failures": [list(basis[i]) for i in s.failures],
        })
        raise CliError(EXIT_RECON, str(exc)) from None
    except ValueError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from None
    with open(args.out, "w") as fh:
        fh.write(surface.to_text())
    _emit({
        "primes": list(surface.primes),
        "terms": sum(1 for c in surface.coeffs if c),
        "max_digits": surface.max_digits,
        "out": args.out,
    })
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(args.level, seed=args.seed)
    for r in results:
        status = "ok" if r.passed else "FAILED"
        print(f"{status:6} {r.name:18} {r.mode:13} {r.seconds:7.3f}s {r.detail}", file=sys.stderr)
    failed = [r.name for r in results if not r.passed]
    _emit({"level": args.level, "passed": not failed, "failed": failed, "results": [r.to_json() for r in results]})
    return EXIT_OK if not failed else 1


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=["q", "fp"], help="coefficient field (default: from input, else Q)")
    common.add_argument("--prime", type=int, help="the prime for --field fp")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")

    parser = argparse.ArgumentParser(prog="genus2split", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="Igusa and absolute invariants of a curve")
    p.add_argument("curve", help="curve JSON file, or - for stdin")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("family", parents=[common], help="C2, E2 and C4 for parameters (b, c, s)")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("s")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("richelot", parents=[common], help="Richelot codomain of a quadratic splitting")
    p.add_argument("curve", help="curve JSON file")
    p.add_argument("splitting", help="splitting JSON file with keys h and Q")
    p.set_defaults(func=cmd_richelot)

    h = sub.add_parser("humbert", help="interpolate and test the weighted-degree relation")
    hsub = h.add_subparsers(dest="action", required=True)
    p = hsub.add_parser("interpolate", parents=[common])
    p.add_argument("--samples", type=int, help="number of samples (default: basis size + 64)")
    p.add_argument("--max-weight", type=int, default=90)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_humbert_interpolate)
    p = hsub.add_parser("membership", parents=[common])
    p.add_argument("relation", help="relation file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--triple", nargs=3, metavar=("I1", "I2", "I3"))
    g.add_argument("--family", nargs=3, metavar=("B", "C", "S"), help="use C4 at these parameters")
    g.add_argument("--curve", help="curve JSON file")
    p.set_defaults(func=cmd_humbert_membership)
    p = hsub.add_parser("combine", parents=[common])
    p.add_argument("relations", nargs="+", help="mod-p relation files")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_humbert_combine)

    p = sub.add_parser("selftest", parents=[common], help="check the structural identities")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except DegenerateParametersError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except SingularCurveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
