"""Transposition polynomials, moment-based degree analysis, and exhaustive checks."""

from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .errors import DegeneratePair, EvenModulus, KOutOfRange, TooLarge, VerificationFailure
from .interpolation import FunctionTable, functions_equal, interpolate, table_of, vanishing_poly
from .modular import PrimeModulus, as_modulus, mod_inv
from .polyfn import (
    CanonicalPoly,
    Polynomial,
    canonical_reduce,
    divide_exact,
    lhopital_eval,
    poly_compose,
    poly_eval,
    poly_pow,
    synthetic_divide,
)

LONG_SCANS_ENV = "PERMPOLY_LONG_SCANS"
SCAN_BUDGET = math.factorial(7)
LONG_SCAN_BUDGET = math.factorial(11)


@dataclass(frozen=True)
class TranspositionSpec:
    """The swap (a b); a and b are reduced mod p when paired with a modulus."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise DegeneratePair(f"a = b = {self.a}")

    def reduced(self, p: int) -> tuple[int, int]:
        a, b = self.a % p, self.b % p
        if a == b:
            raise DegeneratePair(f"a and b coincide mod {p}: {self.a}, {self.b}")
        return a, b


def _as_pair(spec) -> TranspositionSpec:
    if isinstance(spec, TranspositionSpec):
        return spec
    a, b = spec
    return TranspositionSpec(a, b)


def _require_odd(p: PrimeModulus, what: str) -> None:
    if not p.is_odd:
        raise EvenModulus(f"{what} needs an odd prime")


def _simple_coeffs(p: int) -> list[int]:
    if p == 2:
        return [1, 1]
    return [1, 2] + [1] * (p - 3)


def transposition_simple(p) -> CanonicalPoly:
    """x^(p-2) + ... + x^2 + 2x + 1, which swaps 0 and 1 and fixes everything else.

    For p = 2 this is 1 - x = x + 1.
    """
    p = as_modulus(p)
    return CanonicalPoly(_simple_coeffs(p.p), p)


def transposition_general(p, spec) -> CanonicalPoly:
    """Swap (a b) by conjugating the (0 1) polynomial with u = (x - a)/(b - a)."""
    p = as_modulus(p)
    _require_odd(p, "transposition_general")
    a, b = _as_pair(spec).reduced(p.p)
    d = (b - a) % p.p
    u = Polynomial((-a * mod_inv(d, p), mod_inv(d, p)), p)
    inner = poly_compose(Polynomial(_simple_coeffs(p.p), p), u)
    return canonical_reduce(inner * d + a)


def chen_mullen_raw(p) -> Polynomial:
    """-[((x-1)^(p-2) + 1)^(p-2) - 1]^(p-2), fully expanded (degree (p-2)^3)."""
    p = as_modulus(p)
    _require_odd(p, "chen_mullen_raw")
    return _chen_mullen(p, reduce=False)


def _chen_mullen(p: PrimeModulus, reduce: bool) -> Polynomial:
    e = p.p - 2
    inner = poly_pow(Polynomial((-1, 1), p), e, reduce=reduce)
    middle = poly_pow(inner + 1, e, reduce=reduce)
    return -poly_pow(middle - 1, e, reduce=reduce)


def transposition_chen_mullen(p) -> CanonicalPoly:
    p = as_modulus(p)
    _require_odd(p, "transposition_chen_mullen")
    return canonical_reduce(_chen_mullen(p, reduce=True))


def transposition_rational(p, spec) -> CanonicalPoly:
    """(b - a)^2 * (x^p - x) / ((x - a)(x - b)) + x, with both divisions exact."""
    p = as_modulus(p)
    _require_odd(p, "transposition_rational")
    a, b = _as_pair(spec).reduced(p.p)
    quotient = divide_exact(divide_exact(vanishing_poly(p, include_zero=True), a), b)
    scale = (b - a) ** 2
    return canonical_reduce(quotient * scale + Polynomial.x(p))


def is_permutation(t: FunctionTable) -> bool:
    return len(set(t.values)) == t.p


def moment(t: FunctionTable, k: int) -> int:
    """sum_a a^k * t[a] mod p, with 0^0 = 1."""
    p = t.p
    if not 0 <= k <= p - 1:
        raise KOutOfRange(f"k = {k} outside [0, {p - 1}]")
    return sum(pow(a, k, p) * fa for a, fa in enumerate(t.values)) % p


@dataclass(frozen=True)
class MomentProfile:
    moments: tuple[int, ...]
    p: int

    @property
    def first_nonzero(self) -> int | None:
        return next((k for k, m in enumerate(self.moments) if m), None)

    @property
    def degree(self) -> int | None:
        k = self.first_nonzero
        return None if k is None else self.p - 1 - k


def moment_profile(t: FunctionTable) -> MomentProfile:
    p = t.p
    sums = [0] * p
    for a, fa in enumerate(t.values):
        if not fa:
            continue
        power = 1
        for k in range(p):
            sums[k] += power * fa
            power = power * a % p
    return MomentProfile(tuple(s % p for s in sums), p)


def canonical_degree_via_moments(t: FunctionTable) -> int | None:
    """Degree of the canonical polynomial of t, read off the moments alone.

    It is p-1-k for the first k with a nonzero k-th moment; None means every
    moment vanishes and t is the zero function.
    """
    return moment_profile(t).degree


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    p: int
    checks: list[Check] = field(default_factory=list)
    degree_histogram: dict[int, int] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"p": self.p, "checks": [c.to_dict() for c in self.checks]}
        if self.degree_histogram is not None:
            out["degree_histogram"] = {str(d): n for d, n in sorted(self.degree_histogram.items())}
        return out

    def raise_on_failure(self) -> Report:
        bad = self.first_failure
        if bad is not None:
            raise VerificationFailure(bad, self)
        return self


def _check_simple_table(p: PrimeModulus) -> Check:
    values = table_of(transposition_simple(p)).values
    expected = [1, 0] + list(range(2, p.p))
    bad = next((a for a in range(p.p) if values[a] != expected[a]), None)
    witness = None if bad is None else {"a": bad, "f(a)": values[bad], "expected": expected[bad]}
    return Check("simple_table", bad is None, witness)


def _check_pairs(p: PrimeModulus) -> Check:
    for a, b in itertools.combinations(range(p.p), 2):
        if transposition_general(p, (a, b)) != transposition_rational(p, (a, b)):
            return Check("general_equals_rational", False, {"a": a, "b": b})
    return Check("general_equals_rational", True)


def planted_root_instance(p: PrimeModulus, rng, max_degree: int) -> tuple[Polynomial, int]:
    """Random f = (x - c) * g with a known root c."""
    c = rng.randrange(p.p)
    g = Polynomial([rng.randrange(p.p) for _ in range(rng.randint(1, max_degree + 1))], p)
    return Polynomial((-c, 1), p) * g, c


def _check_lhopital(p: PrimeModulus, rng, trials: int) -> Check:
    for _ in range(trials):
        f, c = planted_root_instance(p, rng, 2 * p.p)
        quotient, _ = synthetic_divide(f, c)
        if lhopital_eval(f, c) != poly_eval(quotient, c):
            return Check("lhopital_random", False, {"coeffs": list(f.coeffs), "c": c})
    return Check("lhopital_random", True)


def verify_transposition_forms(p, *, strict: bool = True, rng=None, trials: int = 200) -> Report:
    """Cross-check every transposition construction at one odd prime.

    Checks, in order: the (0 1) polynomial has the right table; the nested
    Chen-Mullen form reduces to it; the conjugated and rational forms agree on
    every pair a < b; and the raw nested expansion minus the simple polynomial
    is divisible by x^p - x. Given ``rng`` (a random.Random), ``trials``
    planted-root l'Hopital evaluations are cross-checked too. With ``strict`` a failure raises
    VerificationFailure, otherwise the report records it.
    """
    p = as_modulus(p)
    _require_odd(p, "verify_transposition_forms")
    simple = transposition_simple(p)
    cm = transposition_chen_mullen(p)
    report = Report(p.p)
    report.checks.append(_check_simple_table(p))
    report.checks.append(
        Check(
            "chen_mullen_equals_simple",
            cm == simple,
            None if cm == simple else {"chen_mullen": list(cm.coeffs)},
        )
    )
    report.checks.append(_check_pairs(p))
    raw_ok = functions_equal(chen_mullen_raw(p), simple)
    report.checks.append(Check("raw_difference_vanishes", raw_ok))
    if rng is not None:
        report.checks.append(_check_lhopital(p, rng, trials))
    if strict:
        report.raise_on_failure()
    return report


def _long_scans_enabled() -> bool:
    return os.environ.get(LONG_SCANS_ENV, "") == "1"


def hermite_scan(p, *, strict: bool = True, allow_long: bool | None = None) -> Report:
    """Interpolate every permutation of Z_p and check the degree restrictions.

    Asserts that no permutation polynomial has degree d > 1 dividing p - 1 and,
    for odd p, that every degree is at most p - 2. The degree histogram is
    reported as observed. Enumeration stops at p = 7 unless long scans are
    enabled (argument or PERMPOLY_LONG_SCANS=1), which admits p = 11.
    """
    p = as_modulus(p)
    q = p.p
    if allow_long is None:
        allow_long = _long_scans_enabled()
    budget = LONG_SCAN_BUDGET if allow_long else SCAN_BUDGET
    if math.factorial(q) > budget:
        raise TooLarge(f"{q}! = {math.factorial(q)} permutations exceeds budget {budget}")

    forbidden = {d for d in range(2, q) if (q - 1) % d == 0}
    histogram: Counter[int] = Counter()
    too_high = None
    divides = None
    for perm in itertools.permutations(range(q)):
        deg = interpolate(FunctionTable(perm, p)).degree
        histogram[deg] += 1
        if too_high is None and q > 2 and deg > q - 2:
            too_high = {"table": list(perm), "degree": deg}
        if divides is None and deg in forbidden:
            divides = {"table": list(perm), "degree": deg}

    report = Report(q, degree_histogram=dict(sorted(histogram.items())))
    if q > 2:
        report.checks.append(Check("degree_at_most_p_minus_2", too_high is None, too_high))
    report.checks.append(Check("no_degree_dividing_p_minus_1", divides is None, divides))
    if strict:
        report.raise_on_failure()
    return report
