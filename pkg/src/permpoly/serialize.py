"""JSON and text forms of polynomials, tables and reports."""

from __future__ import annotations

import re

from .interpolation import FunctionTable
from .polyfn import Polynomial

_TERM = re.compile(r"^(\d*)(x(?:\^(\d+))?)?$")


def poly_to_dict(f: Polynomial) -> dict:
    return {"p": f.p, "coeffs": list(f.coeffs)}


def poly_from_dict(d: dict) -> Polynomial:
    p = int(d["p"])
    coeffs = [int(c) for c in d["coeffs"]]
    bad = [c for c in coeffs if not 0 <= c < p]
    if bad:
        raise ValueError(f"coefficients out of range [0, {p - 1}]: {bad[:5]}")
    return Polynomial(coeffs, p)


def table_to_dict(t: FunctionTable) -> dict:
    return {"p": t.p, "values": list(t.values)}


def table_from_dict(d: dict) -> FunctionTable:
    return FunctionTable(d["values"], int(d["p"]))


def render_poly(f: Polynomial) -> str:
    """Descending powers, e.g. ``x^3 + x^2 + 2x + 1``; the zero polynomial is ``0``."""
    terms = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
            continue
        head = "" if c == 1 else str(c)
        terms.append(head + ("x" if e == 1 else f"x^{e}"))
    return " + ".join(terms) if terms else "0"


def parse_poly(text: str, p) -> Polynomial:
    """Inverse of :func:`render_poly`."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(p)
    coeffs: dict[int, int] = {}
    for raw in text.split("+"):
        m = _TERM.match(raw.strip())
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {raw.strip()!r}")
        c = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            e = 0
        else:
            e = int(m.group(3)) if m.group(3) else 1
        coeffs[e] = coeffs.get(e, 0) + c
    top = max(coeffs)
    return Polynomial([coeffs.get(e, 0) for e in range(top + 1)], p)
