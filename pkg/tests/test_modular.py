import pytest
from hypothesis import given, strategies as st

from permpoly.errors import CompositeModulus, DivisionByZero, OutOfRange
from permpoly.modular import PrimeModulus, is_prime, mod_inv, mod_pow, primes_up_to, validate_prime


def trial_division(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def test_validate_prime_examples():
    assert validate_prime(2) == PrimeModulus(2)
    assert validate_prime(97).p == 97
    with pytest.raises(CompositeModulus):
        validate_prime(4)


def test_97_by_trial_division():
    assert all(97 % d for d in range(2, 10))


@pytest.mark.parametrize("n", [-5, 0, 1, 2**64, 2**64 + 13])
def test_out_of_range(n):
    with pytest.raises(OutOfRange):
        validate_prime(n)


def test_agrees_with_trial_division_below_20000():
    assert [n for n in range(20000) if is_prime(n)] == [n for n in range(20000) if trial_division(n)]


@pytest.mark.parametrize(
    "n, expected",
    [
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest prime below 2**64
        (2**64 - 1, False),
        (561, False),  # Carmichael
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases 2..23
        (4294967291, True),
        (1000000007 * 998244353, False),
    ],
)
def test_large_words(n, expected):
    assert is_prime(n) is expected


def test_pseudoprime_factorizations():
    assert 151 * 751 * 28351 == 3215031751
    assert 149491 * 747451 * 34233211 == 3825123056546413051


def test_primes_up_to():
    assert primes_up_to(31) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_mod_pow_examples():
    assert mod_pow(2, 4, 5) == 16 % 5 == 1
    assert mod_pow(0, 0, 7) == 1
    assert 3**6 == 729 == 104 * 7 + 1
    assert mod_pow(3, 6, 7) == 1


def test_mod_pow_negative_exponent():
    with pytest.raises(ValueError):
        mod_pow(2, -1, 5)


@given(st.sampled_from(primes_up_to(97)), st.integers(0, 10**6), st.integers(0, 20))
def test_mod_pow_matches_repeated_multiplication(p, base, exp):
    acc = 1
    for _ in range(exp):
        acc = acc * base % p
    assert mod_pow(base, exp, p) == acc


@pytest.mark.parametrize("p", primes_up_to(97))
def test_fermat_exhaustive(p):
    for a in range(p):
        assert mod_pow(a, p, p) == a
        if a:
            assert mod_pow(a, p - 1, p) == 1


def test_mod_inv_examples():
    assert mod_inv(1, 5) == 1
    assert [b for b in range(5) if 2 * b % 5 == 1] == [3]
    assert mod_inv(2, 5) == 3
    with pytest.raises(DivisionByZero):
        mod_inv(0, 7)
    with pytest.raises(ZeroDivisionError):
        mod_inv(14, 7)


@pytest.mark.parametrize("p", primes_up_to(97))
def test_mod_inv_exhaustive(p):
    for a in range(1, p):
        assert a * mod_inv(a, p) % p == 1


def test_mod_inv_near_word_bound():
    p = 2**64 - 59
    a = 2**63 + 12345
    assert a * mod_inv(a, p) % p == 1
