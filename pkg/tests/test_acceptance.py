"""Exit criteria. Each test is tagged with its criterion number; the terminal
summary prints one PASS/FAIL line per criterion."""

import itertools
import subprocess
import sys

import pytest

from permpoly.interpolation import FunctionTable, interpolate, table_of, vanishing_poly
from permpoly.modular import PrimeModulus, primes_up_to
from permpoly.permutations import (
    canonical_degree_via_moments,
    hermite_scan,
    planted_root_instance,
    transposition_chen_mullen,
    transposition_general,
    transposition_rational,
    transposition_simple,
)
from permpoly.polyfn import Polynomial, lhopital_eval, poly_pow, synthetic_divide

ODD_97 = primes_up_to(97)[1:]
ODD_31 = primes_up_to(31)[1:]


@pytest.mark.criterion(1, "transposition_simple table is [1, 0, 2, ..., p-1] for odd p <= 97")
def test_simple_table(stopwatch):
    for p in ODD_97:
        assert table_of(transposition_simple(p)).values == (1, 0, *range(2, p)), p
    assert stopwatch() < 1


@pytest.mark.criterion(2, "nested Chen-Mullen form reduces to transposition_simple, odd p <= 31")
def test_chen_mullen(stopwatch):
    for p in ODD_31:
        assert transposition_chen_mullen(p).coeffs == transposition_simple(p).coeffs, p
    assert stopwatch() < 5


@pytest.mark.criterion(3, "conjugated and rational forms agree on all pairs, odd p <= 31")
def test_general_equals_rational(stopwatch):
    for p in ODD_31:
        for a, b in itertools.combinations(range(p), 2):
            assert transposition_general(p, (a, b)) == transposition_rational(p, (a, b)), (p, a, b)
    assert stopwatch() < 30


@pytest.mark.criterion(4, "canonical polynomials biject with tables (p=3), round trip at p=5")
def test_fact1_bijection(stopwatch):
    polys = [Polynomial(c, 3) for c in itertools.product(range(3), repeat=3)]
    tables = [table_of(f) for f in polys]
    assert len(set(tables)) == 27
    for f, t in zip(polys, tables):
        assert interpolate(t) == f
    count = 0
    for values in itertools.product(range(5), repeat=5):
        t = FunctionTable(values, 5)
        assert table_of(interpolate(t)) == t
        count += 1
    assert count == 3125
    assert stopwatch() < 5


@pytest.mark.criterion(5, "vanishing products for p <= 61; Frobenius rewrite for p <= 31, a != b")
def test_vanishing_identities(stopwatch):
    for p in primes_up_to(61):
        assert list(vanishing_poly(p, True).coeffs) == [0, p - 1] + [0] * (p - 2) + [1]
        assert list(vanishing_poly(p, False).coeffs) == [p - 1] + [0] * (p - 2) + [1]
    for p in primes_up_to(31):
        target = Polynomial.monomial(1, p, p) - Polynomial.x(p)
        for a in range(p):
            shift = Polynomial((-a, 1), p)
            frob = poly_pow(shift, p)
            for b in range(p):
                if a != b:
                    assert frob - shift * pow(b - a, p - 1, p) == target, (p, a, b)
    assert stopwatch() < 10


@pytest.mark.criterion(6, "moment criterion matches interpolated degree (p=3, 5 exhaustive; 7, 11 random)")
def test_moment_degree(stopwatch, rng):
    disagreements = 0
    checked = {}
    for p in (3, 5):
        tables = [FunctionTable(v, p) for v in itertools.product(range(p), repeat=p)]
        checked[p] = len(tables)
        disagreements += sum(canonical_degree_via_moments(t) != interpolate(t).degree for t in tables)
    for p in (7, 11):
        for _ in range(10_000):
            t = FunctionTable([rng.randrange(p) for _ in range(p)], p)
            disagreements += canonical_degree_via_moments(t) != interpolate(t).degree
        checked[p] = 10_000
    assert checked == {3: 27, 5: 3125, 7: 10_000, 11: 10_000}
    assert disagreements == 0
    assert stopwatch() < 30


@pytest.mark.criterion(7, "hermite_scan passes at p = 3, 5, 7")
def test_hermite(stopwatch):
    for p in (3, 5, 7):
        report = hermite_scan(p)
        assert report.passed
        hist = report.degree_histogram
        assert max(hist) <= p - 2
        assert not any(d > 1 and (p - 1) % d == 0 for d in hist)
    assert sum(hist.values()) == 5040
    assert stopwatch() < 60


@pytest.mark.criterion(8, "l'Hopital evaluation matches quotient evaluation, 1000 instances per p")
def test_lhopital(rng):
    for p in (5, 7, 11, 31):
        mod = PrimeModulus(p)
        for _ in range(1000):
            f, c = planted_root_instance(mod, rng, 3 * p)
            q, r = synthetic_divide(f, c)
            assert r == 0
            assert lhopital_eval(f, c) == q(c), (f, c)


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "permpoly", *argv], capture_output=True)


@pytest.mark.criterion(9, "CLI examples byte-for-byte; verify --p-max 31 exits 0")
def test_cli_contract():
    simple = _cli("transposition", "--p", "5", "--form", "simple")
    assert (simple.returncode, simple.stdout) == (0, b"x^3 + x^2 + 2x + 1\n")
    ident = _cli("interpolate", "--p", "3", "--table", "0,1,2")
    assert (ident.returncode, ident.stdout) == (0, b"x\n")
    verify = _cli("verify", "--p-max", "31")
    assert verify.returncode == 0
    assert verify.stdout.decode().splitlines() == [f"p={p}: pass (4 checks)" for p in ODD_31]
