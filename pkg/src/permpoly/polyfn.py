"""Polynomial arithmetic in Z_p[x] and reduction modulo x^p - x."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import InexactDivision, ModulusMismatch, NotARoot
from .modular import PrimeModulus, as_modulus, mod_inv

# Below this many coefficient products the pure-Python loop beats numpy's setup cost.
_NUMPY_MIN_WORK = 2048
_INT64_MAX = (1 << 63) - 1


def _strip(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Element of Z_p[x].

    ``coeffs[i]`` is the coefficient of x**i. Coefficients are reduced mod p and
    trailing zeros dropped on construction, so the zero polynomial has
    ``coeffs == ()`` and ``degree is None``.
    """

    coeffs: tuple[int, ...]
    modulus: PrimeModulus

    def __init__(self, coeffs: Iterable[int], p: int | PrimeModulus):
        modulus = as_modulus(p)
        q = modulus.p
        object.__setattr__(self, "coeffs", tuple(_strip([int(c) % q for c in coeffs])))
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def _trusted(cls, coeffs: list[int], modulus: PrimeModulus) -> Polynomial:
        # coeffs already reduced and stripped
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        object.__setattr__(obj, "modulus", modulus)
        return obj

    @classmethod
    def zero(cls, p):
        return cls((), p)

    @classmethod
    def constant(cls, c, p):
        return cls((c,), p)

    @classmethod
    def x(cls, p):
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, c, e, p):
        return cls([0] * e + [c], p)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial (which has no degree)."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)}, p={self.p})"

    def __len__(self):
        return len(self.coeffs)

    def __call__(self, a: int) -> int:
        return poly_eval(self, a)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.p != self.p:
                raise ModulusMismatch(self.p, other.p)
            return other
        if isinstance(other, int):
            return Polynomial((other,), self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith("add", self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith("sub", self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith("sub", other, self)

    def __neg__(self):
        p = self.p
        return Polynomial._trusted([(p - c) % p for c in self.coeffs], self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_arith("mul", self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)


class CanonicalPoly(Polynomial):
    """A polynomial of degree at most p-1: the unique representative of its function."""

    def __init__(self, coeffs: Iterable[int], p: int | PrimeModulus):
        super().__init__(coeffs, p)
        if len(self.coeffs) > self.p:
            raise ValueError(f"degree {self.degree} exceeds p-1 = {self.p - 1}")

    @classmethod
    def _trusted(cls, coeffs, modulus):
        assert len(coeffs) <= modulus.p
        return super()._trusted(coeffs, modulus)


def _check_shared(f: Polynomial, g: Polynomial) -> None:
    if f.p != g.p:
        raise ModulusMismatch(f.p, g.p)


def _convolve(f: tuple[int, ...] | list[int], g, p: int) -> list[int]:
    """Exact product of two reduced coefficient vectors, reduced mod p."""
    if not f or not g:
        return []
    n, m = len(f), len(g)
    # numpy path only when every accumulated sum provably fits in int64
    if n * m >= _NUMPY_MIN_WORK and (p - 1) ** 2 * min(n, m) <= _INT64_MAX:
        out = np.convolve(np.asarray(f, dtype=np.int64), np.asarray(g, dtype=np.int64))
        return (out % p).tolist()
    return _schoolbook(f, g, p)


def _schoolbook(f, g, p: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return [c % p for c in out]


def poly_arith(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    """Ring operation ``op`` in {"add", "sub", "mul"} on polynomials over the same p."""
    _check_shared(f, g)
    p = f.p
    if op == "mul":
        return Polynomial._trusted(_strip(_convolve(f.coeffs, g.coeffs, p)), f.modulus)
    if op not in ("add", "sub"):
        raise ValueError(f"unknown operation {op!r}")
    sign = 1 if op == "add" else -1
    n = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (n - len(f.coeffs))
    b = g.coeffs + (0,) * (n - len(g.coeffs))
    return Polynomial._trusted(_strip([(x + sign * y) % p for x, y in zip(a, b)]), f.modulus)


def poly_eval(f: Polynomial, a: int) -> int:
    """Horner evaluation at a."""
    p = f.p
    a %= p
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * a + c) % p
    return acc


def _fold(coeffs, p: int) -> list[int]:
    # x^e -> x^(e-(p-1)) until e <= p-1; the constant term never moves
    if len(coeffs) <= p:
        return _strip(list(coeffs))
    out = [0] * p
    out[0] = coeffs[0]
    for e in range(1, len(coeffs)):
        c = coeffs[e]
        if c:
            out[(e - 1) % (p - 1) + 1] += c
    return _strip([c % p for c in out])


def canonical_reduce(f: Polynomial) -> CanonicalPoly:
    """The unique polynomial of degree <= p-1 congruent to f modulo x^p - x."""
    return CanonicalPoly._trusted(_fold(f.coeffs, f.p), f.modulus)


def poly_pow(f: Polynomial, e: int, reduce: bool = False) -> Polynomial:
    """f**e by square-and-multiply; with ``reduce`` every product is folded mod x^p - x."""
    if e < 0:
        raise ValueError("negative exponent")
    p = f.p
    step = (lambda c: _fold(c, p)) if reduce else _strip
    result = [1]
    base = step(list(f.coeffs))
    while e:
        if e & 1:
            result = step(_convolve(result, base, p))
        e >>= 1
        if e:
            base = step(_convolve(base, base, p))
    cls = CanonicalPoly if reduce else Polynomial
    return cls._trusted(result, f.modulus)


def poly_compose(f: Polynomial, g: Polynomial, reduce: bool = True) -> Polynomial:
    """f(g(x)).

    With ``reduce`` (the default) the Horner accumulator is folded modulo x^p - x
    after each multiplication, so intermediates stay below degree 2(p-1) and the
    result is canonical. Without it the raw composite is returned.
    """
    _check_shared(f, g)
    p = f.p
    inner = _fold(g.coeffs, p) if reduce else g.coeffs
    acc: list[int] = []
    for c in reversed(f.coeffs):
        acc = _convolve(acc, inner, p)
        if reduce:
            acc = _fold(acc, p)
        if acc:
            acc[0] = (acc[0] + c) % p
        elif c:
            acc = [c]
        _strip(acc)
    if reduce:
        return CanonicalPoly._trusted(acc, f.modulus)
    return Polynomial._trusted(acc, f.modulus)


def poly_derivative(f: Polynomial) -> Polynomial:
    p = f.p
    return Polynomial._trusted(
        _strip([i * c % p for i, c in enumerate(f.coeffs)][1:]), f.modulus
    )


def synthetic_divide(f: Polynomial, c: int) -> tuple[Polynomial, int]:
    """Divide by (x - c): returns (quotient, remainder) with remainder == f(c)."""
    p = f.p
    c %= p
    if not f.coeffs:
        return Polynomial.zero(f.modulus), 0
    quotient = []
    acc = 0
    for coeff in reversed(f.coeffs):
        acc = (acc * c + coeff) % p
        quotient.append(acc)
    remainder = quotient.pop()
    quotient.reverse()
    return Polynomial._trusted(_strip(quotient), f.modulus), remainder


def divide_exact(f: Polynomial, c: int) -> Polynomial:
    """f / (x - c), raising InexactDivision if c is not a root."""
    q, r = synthetic_divide(f, c)
    if r:
        raise InexactDivision(f"x - {c % f.p} does not divide {f!r} (remainder {r})")
    return q


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Long division f = q*g + r with deg r < deg g."""
    _check_shared(f, g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = f.p
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead_inv = mod_inv(g.coeffs[-1], p)
    q = [0] * max(len(rem) - dg, 0)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] * lead_inv % p
        if not c:
            continue
        q[i - dg] = c
        for j, gc in enumerate(g.coeffs):
            if gc:
                rem[i - dg + j] = (rem[i - dg + j] - c * gc) % p
    return (
        Polynomial._trusted(_strip(q), f.modulus),
        Polynomial._trusted(_strip(rem[:dg]), f.modulus),
    )


def lhopital_eval(f: Polynomial, c: int) -> int:
    """Value of f(x)/(x - c) at x = c, computed as f'(c); c must be a root of f."""
    if poly_eval(f, c):
        raise NotARoot(f"f({c % f.p}) = {poly_eval(f, c)} != 0")
    return poly_eval(poly_derivative(f), c)
