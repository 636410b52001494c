"""Truncated formal power series over the rationals, and the integer sequences
built from the factorial series.

A :class:`Series` of order ``N`` stores the coefficients of ``X**0 .. X**N``.
Read at infinity the same list holds the coefficients of ``1/z**(k+1)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .errors import NotRevertible, UnknownSequence, ZeroConstantTerm

DEFAULT_MAX_ORDER = 64


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __init__(self, coeffs: Iterable):
        coeffs = tuple(_frac(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "Series":
        """The series ``X`` truncated at ``order`` (order >= 1)."""
        return cls([0, 1] + [0] * (order - 1))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[: order + 1])

    def __add__(self, other):
        return series_arith(self, _coerce(other, self.order), "add")

    __radd__ = __add__

    def __neg__(self):
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_arith(self, other, "mul")
        c = _frac(other)
        return Series(c * a for a in self.coeffs)

    __rmul__ = __mul__

    def __call__(self, inner: "Series") -> "Series":
        return compose(self, inner)

    def __repr__(self):
        return "Series([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _coerce(x, order: int) -> Series:
    if isinstance(x, Series):
        return x
    return Series([x] + [0] * order)


def series_arith(a: Series, b: Series, kind: str) -> Series:
    """Truncated sum (``kind='add'``) or Cauchy product (``kind='mul'``)."""
    n = min(a.order, b.order)
    if kind == "add":
        return Series(a[k] + b[k] for k in range(n + 1))
    if kind == "mul":
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)))
        return Series(out)
    raise ValueError(f"unknown kind {kind!r}")


def add(a: Series, b: Series) -> Series:
    return series_arith(a, b, "add")


def mul(a: Series, b: Series) -> Series:
    return series_arith(a, b, "mul")


def recip(a: Series) -> Series:
    """Multiplicative inverse, truncated at the order of ``a``."""
    if a[0] == 0:
        raise ZeroConstantTerm("constant term is zero; series has no reciprocal")
    inv0 = 1 / a[0]
    b = [inv0]
    for k in range(1, a.order + 1):
        s = sum((a[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
        b.append(-s * inv0)
    return Series(b)


def compose(a: Series, b: Series) -> Series:
    """``a(b(X))`` for ``b`` without constant term, by Horner's rule."""
    if b[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(a.order, b.order)
    b = b.truncate(n)
    acc = Series.one(n) * a[n]
    for k in range(n - 1, -1, -1):
        acc = mul(acc, b) + a[k]
    return acc


def revert(a: Series) -> Series:
    """Compositional inverse ``R`` with ``a(R(X)) = X`` to the order of ``a``.

    Uses Lagrange inversion: ``[X^n] R = [X^(n-1)] (X/a)^n / n``.
    """
    if a.order < 1 or a[0] != 0 or a[1] == 0:
        raise NotRevertible("need a[0] == 0 and a[1] != 0")
    n = a.order
    h = recip(Series(a.coeffs[1:]))  # X / a(X), order n-1
    r = [Fraction(0)]
    power = h
    for k in range(1, n + 1):
        r.append(power[k - 1] / k)
        if k < n:
            power = mul(power, h)
    return Series(r)


class SequenceName(enum.Enum):
    FACTORIAL = "factorial"
    D = "D"
    A = "A"
    I = "I"  # noqa: E741
    DPRIME = "Dp"
    G = "G"
    J = "J"
    H = "H"

    @classmethod
    def parse(cls, name) -> "SequenceName":
        if isinstance(name, cls):
            return name
        key = _ALIASES.get(str(name).strip(), str(name).strip())
        try:
            return cls(key)
        except ValueError:
            raise UnknownSequence(f"unknown sequence {name!r}") from None


_ALIASES = {"fact": "factorial", "n!": "factorial", "D'": "Dp", "D′": "Dp", "Dprime": "Dp"}


def factorial_series(order: int, shift: int = 0) -> Series:
    """``sum_k (k+shift)! X^k``."""
    return Series(factorial(k + shift) for k in range(order + 1))


def binomial_shift(a: Sequence, c) -> list:
    """``b_n = sum_k C(n,k) a_k c^(n-k)``; re-expands ``sum a_n/x^n`` around ``x + c``."""
    c = _frac(c)
    a = [_frac(v) for v in a]
    return [sum((comb(n, k) * a[k] * c ** (n - k) for k in range(n + 1)), Fraction(0))
            for n in range(len(a))]


def derangements(N: int) -> list:
    return [Fraction(factorial(n) * sum(Fraction((-1) ** k, factorial(k)) for k in range(n + 1)))
            for n in range(N + 1)]


def arrangements(N: int) -> list:
    return [Fraction(sum(factorial(n) // factorial(k) for k in range(n + 1))) for n in range(N + 1)]


def harmonic_numbers(N: int) -> list:
    out = [Fraction(0)]
    for n in range(1, N + 1):
        out.append(out[-1] + Fraction(1, n))
    return out


def gen_sequence(name, N: int) -> list:
    """First ``N + 1`` terms (index 0..N) of a named sequence, exactly.

    Index conventions: ``D_0 = A_0 = 1``, ``I_0 = 0``, ``D'_0 = -1``,
    ``G_0 = 0`` (so ``G_1 = -1``), ``J_0 = 1``, ``H_0 = 0``.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    name = SequenceName.parse(name)
    if name is SequenceName.FACTORIAL:
        return [Fraction(factorial(n)) for n in range(N + 1)]
    if name is SequenceName.D:
        return derangements(N)
    if name is SequenceName.A:
        return arrangements(N)
    if name is SequenceName.H:
        return harmonic_numbers(N)
    if name is SequenceName.I:
        # sum I_{k+1} X^k = 1/X - 1/(X sum k! X^k)
        r = recip(factorial_series(N))
        return [Fraction(0)] + [-r[k] for k in range(1, N + 1)]
    if name is SequenceName.DPRIME:
        return list(-recip(Series(derangements(N))))
    # G and J both come from the reversion of F(X) = sum (n-1)! X^n
    F = Series([0] + [factorial(n - 1) for n in range(1, N + 2)])
    R = revert(F)
    if name is SequenceName.G:
        return [-c for c in R.coeffs[: N + 1]]
    return list(recip(Series(R.coeffs[1:])))  # X / G(X)


def secondary_moments(mu: Sequence, N: int) -> list:
    """Moments ``nu_0..nu_N`` of the secondary measure of ``mu``.

    From ``X sum nu_k X^k = 1/X - m1/m0 - m0/(X sum mu_k X^k)`` one gets
    ``nu_k = -m0 * [X^(k+2)] (1 / sum mu_k X^k)``.
    """
    if len(mu) < N + 3:
        raise ValueError(f"need at least {N + 3} moments, got {len(mu)}")
    M = Series(mu[: N + 3])
    if M[0] == 0:
        raise ZeroConstantTerm("zeroth moment vanishes")
    r = recip(M)
    return [-M[0] * r[k + 2] for k in range(N + 1)]


def p_poly(n: int) -> list:
    """Coefficients (low to high) of ``p_n(t) = n! sum_{k<=n} t^k/k!``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Fraction(factorial(n) // factorial(k)) for k in range(n + 1)]
