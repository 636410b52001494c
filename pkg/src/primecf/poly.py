"""Dense polynomials with Fraction coefficients, stored low degree first.

The zero polynomial is the empty tuple; every other value is trimmed so the
last entry is nonzero.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

Poly = tuple


def poly(coeffs: Iterable) -> Poly:
    c = [x if isinstance(x, Fraction) else Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Sequence) -> int:
    return len(p) - 1  # -1 for the zero polynomial


def add(p, q) -> Poly:
    return poly(a + b for a, b in zip_longest(p, q, fillvalue=Fraction(0)))


def sub(p, q) -> Poly:
    return poly(a - b for a, b in zip_longest(p, q, fillvalue=Fraction(0)))


def scale(p, c) -> Poly:
    return poly(c * a for a in p)


def mul(p, q) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def mul_linear(p, c, lead=1) -> Poly:
    """``(lead*z + c) * p``."""
    out = [Fraction(0)] * (len(p) + 1)
    for i, a in enumerate(p):
        out[i] += c * a
        out[i + 1] += lead * a
    return poly(out)


def divmod_poly(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for k in range(len(p) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quo[k] = c
        if c:
            for j in range(dq + 1):
                r[k + j] -= c * q[j]
    return poly(quo), poly(r[:dq])


def monic(p) -> Poly:
    if not p:
        return ()
    return scale(p, 1 / p[-1])


def gcd(p, q) -> Poly:
    """Monic greatest common divisor."""
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def evaluate(p, z):
    """Horner evaluation; ``z`` may be a Fraction or a float."""
    if isinstance(z, float):
        acc = 0.0
        for a in reversed(p):
            acc = acc * z + float(a)
        return acc
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * z + a
    return acc


def fmt(p) -> str:
    """Coefficients low to high joined by ';', rationals as p/q."""
    return ";".join(str(c) for c in p) if p else "0"
