"""Moving between value tables and canonical polynomials over Z_p."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidTable
from .modular import PrimeModulus, as_modulus
from .polyfn import (
    CanonicalPoly,
    Polynomial,
    _check_shared,
    canonical_reduce,
    poly_divmod,
    poly_eval,
)


@dataclass(frozen=True, eq=False)
class FunctionTable:
    """The values f(0), ..., f(p-1) of a function Z_p -> Z_p."""

    values: tuple[int, ...]
    modulus: PrimeModulus

    def __init__(self, values: Iterable[int], p: int | PrimeModulus):
        modulus = as_modulus(p)
        values = tuple(int(v) for v in values)
        if len(values) != modulus.p:
            raise InvalidTable(f"table has {len(values)} entries, expected {modulus.p}")
        bad = [v for v in values if not 0 <= v < modulus.p]
        if bad:
            raise InvalidTable(f"entries out of range [0, {modulus.p - 1}]: {bad[:5]}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "modulus", modulus)

    @property
    def p(self) -> int:
        return self.modulus.p

    def __getitem__(self, a):
        return self.values[a]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return self.p == other.p and self.values == other.values

    def __hash__(self):
        return hash((self.p, self.values))

    def __repr__(self):
        return f"FunctionTable({list(self.values)}, p={self.p})"

    @classmethod
    def identity(cls, p):
        return cls(range(int(p)), p)


def table_of(f: Polynomial) -> FunctionTable:
    return FunctionTable([poly_eval(f, a) for a in range(f.p)], f.modulus)


def _binomial_row(n: int, p: int) -> list[int]:
    row = [1]
    for k in range(1, n + 1):
        row.append(row[-1] * (n - k + 1) // k)
    return [c % p for c in row]


def interpolate(t: FunctionTable) -> CanonicalPoly:
    """Canonical polynomial with table t.

    Expands  sum_a t[a] * (1 - (x - a)^(p-1)), using that (x - a)^(p-1) is 1 off
    x = a and 0 at x = a. The binomial expansion of (x - a)^(p-1) contributes
    C(p-1, j) * (-a)^(p-1-j) to the coefficient of x^j, with 0^0 = 1.
    """
    p = t.p
    n = p - 1
    binom = _binomial_row(n, p)
    out = [0] * p
    for a, fa in enumerate(t.values):
        if not fa:
            continue
        out[0] += fa
        neg_a = (-a) % p
        # walk j downward so the power of -a grows from 0
        power = 1
        for j in range(n, -1, -1):
            out[j] -= fa * binom[j] * power
            power = power * neg_a % p
    return CanonicalPoly([c % p for c in out], t.modulus)


def vanishing_poly(p: int | PrimeModulus, include_zero: bool = True) -> Polynomial:
    """Expanded product of (x - a) over all a in Z_p, or over the nonzero a only.

    The two products collapse to x^p - x and x^(p-1) - 1 respectively; the
    expansion is checked against that closed form before returning.
    """
    modulus = as_modulus(p)
    q = modulus.p
    start = 0 if include_zero else 1
    prod = Polynomial.constant(1, modulus)
    for a in range(start, q):
        prod = prod * Polynomial((-a, 1), modulus)
    if include_zero:
        expected = Polynomial.monomial(1, q, modulus) - Polynomial.x(modulus)
    else:
        expected = Polynomial.monomial(1, q - 1, modulus) - 1
    assert prod == expected, f"product over Z_{q} expanded to {prod!r}"
    return prod


def _closed_form_vanishing(p: PrimeModulus) -> Polynomial:
    return Polynomial.monomial(1, p.p, p) - Polynomial.x(p)


def functions_equal(f: Polynomial, g: Polynomial) -> bool:
    """Whether f and g induce the same function on Z_p.

    Decided twice: by comparing canonical reductions, and by testing whether
    x^p - x divides f - g. The two answers must agree.
    """
    _check_shared(f, g)
    by_reduction = canonical_reduce(f) == canonical_reduce(g)
    _, rem = poly_divmod(f - g, _closed_form_vanishing(f.modulus))
    by_division = rem.is_zero()
    assert by_reduction == by_division, "reduction and division routes disagree"
    return by_reduction
