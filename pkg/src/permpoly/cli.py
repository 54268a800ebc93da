"""Command-line front end: ``permpoly <command> [options]``.

Exit status is 0 on success, 1 when a verification check fails and 2 for
usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import permutations as perm
from .errors import PermpolyError
from .interpolation import FunctionTable, interpolate
from .modular import PrimeModulus, is_prime
from .polyfn import Polynomial, canonical_reduce
from .serialize import poly_to_dict, render_poly

COMMANDS = ("interpolate", "canonicalize", "transposition", "moments", "verify", "hermite-scan")
FORMS = ("simple", "general", "chen-mullen", "rational")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime modulus")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, help="seed for randomized checks")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--table", help="comma-separated values f(0),...,f(p-1)")
    source.add_argument("--coeffs", help="comma-separated coefficients, ascending powers")
    source.add_argument("--input", type=Path, help="JSON file with p and values/coeffs")

    parser = argparse.ArgumentParser(prog="permpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("interpolate", parents=[common, source], help="table -> canonical polynomial")
    sub.add_parser("canonicalize", parents=[common, source], help="reduce modulo x^p - x")
    t = sub.add_parser("transposition", parents=[common], help="polynomial for a transposition")
    t.add_argument("--form", choices=FORMS, default="simple")
    t.add_argument("--a", type=int)
    t.add_argument("--b", type=int)
    sub.add_parser("moments", parents=[common, source], help="moment profile and degree")
    v = sub.add_parser("verify", parents=[common], help="cross-check transposition forms")
    v.add_argument("--p-max", type=int)
    sub.add_parser("hermite-scan", parents=[common], help="degrees of all permutation polynomials")
    return parser


def _csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed integer list: {text!r}") from None


def _modulus(value) -> PrimeModulus:
    if value is None:
        raise UsageError("--p is required")
    return PrimeModulus(value)


def _load(args, key: str) -> tuple[PrimeModulus, list[int]]:
    """Resolve (p, values) for ``key`` in {"values", "coeffs"} from --input or inline CSV."""
    if args.input is not None:
        try:
            data = json.loads(args.input.read_text())
            p, items = data["p"], data[key]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read {key} from {args.input}: {exc}") from None
        if args.p is not None and args.p != p:
            raise UsageError(f"--p {args.p} disagrees with p={p} in {args.input}")
        if not isinstance(items, list) or not all(isinstance(x, int) for x in items):
            raise UsageError(f"{key} in {args.input} must be a list of integers")
        return _modulus(p), items
    inline = args.table if key == "values" else args.coeffs
    flag = "--table" if key == "values" else "--coeffs"
    if inline is None:
        raise UsageError(f"{flag} or --input is required")
    return _modulus(args.p), _csv(inline)


def _emit_poly(f: Polynomial, fmt: str) -> None:
    print(json.dumps(poly_to_dict(f)) if fmt == "json" else render_poly(f))


def _cmd_interpolate(args) -> int:
    p, values = _load(args, "values")
    _emit_poly(interpolate(FunctionTable(values, p)), args.format)
    return 0


def _cmd_canonicalize(args) -> int:
    p, coeffs = _load(args, "coeffs")
    if any(not 0 <= c < p.p for c in coeffs):
        raise UsageError(f"coefficients must lie in [0, {p.p - 1}]")
    _emit_poly(canonical_reduce(Polynomial(coeffs, p)), args.format)
    return 0


def _cmd_transposition(args) -> int:
    p = _modulus(args.p)
    if args.form in ("general", "rational"):
        if args.a is None or args.b is None:
            raise UsageError(f"--form {args.form} needs --a and --b")
        build = perm.transposition_general if args.form == "general" else perm.transposition_rational
        f = build(p, perm.TranspositionSpec(args.a, args.b))
    elif args.form == "chen-mullen":
        f = perm.transposition_chen_mullen(p)
    else:
        f = perm.transposition_simple(p)
    _emit_poly(f, args.format)
    return 0


def _cmd_moments(args) -> int:
    p, values = _load(args, "values")
    t = FunctionTable(values, p)
    profile = perm.moment_profile(t)
    if args.format == "json":
        print(json.dumps({
            "p": p.p,
            "moments": list(profile.moments),
            "degree": profile.degree,
            "is_permutation": perm.is_permutation(t),
        }))
    else:
        print("moments: " + " ".join(map(str, profile.moments)))
        print("degree: " + ("zero function" if profile.degree is None else str(profile.degree)))
    return 0


def _print_report(report: perm.Report, fmt: str) -> None:
    if fmt == "json":
        return
    if report.passed:
        print(f"p={report.p}: pass ({len(report.checks)} checks)")
    for c in report.checks:
        if not c.passed:
            print(f"p={report.p}: FAIL {c.name} witness={json.dumps(c.witness)}")


def _cmd_verify(args) -> int:
    if args.p is not None:
        primes = [_modulus(args.p)]
    elif args.p_max is not None:
        primes = [PrimeModulus(q) for q in range(3, args.p_max + 1) if is_prime(q)]
        if not primes:
            raise UsageError("--p-max must be at least 3")
    else:
        raise UsageError("--p or --p-max is required")
    rng = random.Random(args.seed) if args.seed is not None else None
    reports = [perm.verify_transposition_forms(q, strict=False, rng=rng) for q in primes]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"pass": ok, "reports": [r.to_dict() for r in reports]}))
    for r in reports:
        _print_report(r, args.format)
    return 0 if ok else 1


def _cmd_hermite(args) -> int:
    report = perm.hermite_scan(_modulus(args.p), strict=False)
    if args.format == "json":
        print(json.dumps(report.to_dict()))
    else:
        for c in report.checks:
            line = f"{c.name}: {'pass' if c.passed else 'FAIL'}"
            if c.witness is not None:
                line += f" witness={json.dumps(c.witness)}"
            print(line)
        for d, n in report.degree_histogram.items():
            print(f"degree {d}: {n}")
    return 0 if report.passed else 1


_DISPATCH = {
    "interpolate": _cmd_interpolate,
    "canonicalize": _cmd_canonicalize,
    "transposition": _cmd_transposition,
    "moments": _cmd_moments,
    "verify": _cmd_verify,
    "hermite-scan": _cmd_hermite,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.p is not None:
            PrimeModulus(args.p)
        return _DISPATCH[args.command](args)
    except (UsageError, PermpolyError) as exc:
        print(f"permpoly {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
