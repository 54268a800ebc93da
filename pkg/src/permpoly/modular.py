"""Residue arithmetic over Z_p and prime validation.

Residues are plain Python ints kept in ``range(p)``; the modulus travels as a
:class:`PrimeModulus`. Python ints never overflow, so products of two residues
need no special double-width handling even for p close to 2**64.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CompositeModulus, DivisionByZero, OutOfRange

WORD_BOUND = 1 << 64

# First 12 primes: a complete deterministic Miller-Rabin witness set for n < 3.3e24.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 2**64."""
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A prime p < 2**64; checked on construction."""

    p: int

    def __post_init__(self):
        n = self.p
        if isinstance(n, bool) or not isinstance(n, int):
            raise TypeError(f"modulus must be an int, got {type(n).__name__}")
        if n < 2 or n >= WORD_BOUND:
            raise OutOfRange(f"modulus {n} outside [2, 2**64)")
        if not is_prime(n):
            raise CompositeModulus(n)

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __str__(self):
        return str(self.p)

    @property
    def is_odd(self) -> bool:
        return self.p != 2


def validate_prime(n: int) -> PrimeModulus:
    return PrimeModulus(n)


def as_modulus(p: int | PrimeModulus) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def mod_pow(base: int, exp: int, p: int | PrimeModulus) -> int:
    """base**exp mod p, with 0**0 == 1."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, int(p))


def mod_inv(a: int, p: int | PrimeModulus) -> int:
    """Inverse of a mod p via Fermat: a**(p-2)."""
    p = int(p)
    a %= p
    if a == 0:
        raise DivisionByZero(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)
