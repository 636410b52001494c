"""Stieltjes and Jacobi continued fractions with exact rational coefficients.

Conventions:

* ``SFraction(a)`` is ``a1/(z -) a2/(1 -) a3/(z -) a4/(1 -) ...``
* ``JFraction(a, b)`` is ``a1/(z + b1 -) a2/(z + b2 -) ...``

The ``n``-th approximant of either is an exact :class:`RationalFunction`;
the empty approximant ``w_0`` is 0.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence, Union

from . import poly as P
from .errors import (DegenerateMoments, IndexOutOfRange, NotProperAtInfinity,
                     NotStieltjesWarning, SingularSystem, TooShort)
from .series import Series, recip


def _fracs(xs) -> tuple:
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in xs)


@dataclass(frozen=True)
class SFraction:
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _fracs(self.a))
        if any(x == 0 for x in self.a):
            raise ValueError("S-fraction coefficients must be nonzero")

    def __len__(self):
        return len(self.a)

    @property
    def is_stieltjes(self) -> bool:
        return all(x > 0 for x in self.a)


@dataclass(frozen=True)
class JFraction:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", _fracs(self.a))
        object.__setattr__(self, "b", _fracs(self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have equal length")
        if any(x == 0 for x in self.a):
            raise ValueError("J-fraction numerators must be nonzero")

    def __len__(self):
        return len(self.a)


@dataclass(frozen=True)
class RationalFunction:
    """Reduced quotient ``P/Q`` with ``Q`` monic."""

    P: tuple
    Q: tuple

    def __post_init__(self):
        num, den = P.poly(self.P), P.poly(self.Q)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            num, den = (), (Fraction(1),)
        else:
            g = P.gcd(num, den)
            if len(g) > 1:
                num = P.divmod_poly(num, g)[0]
                den = P.divmod_poly(den, g)[0]
            lead = den[-1]
            num, den = P.scale(num, 1 / lead), P.scale(den, 1 / lead)
        object.__setattr__(self, "P", num)
        object.__setattr__(self, "Q", den)

    @property
    def degree(self) -> int:
        return max(P.degree(self.P), P.degree(self.Q))

    def __call__(self, z):
        return P.evaluate(self.P, z) / P.evaluate(self.Q, z)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(P.sub(P.mul(self.P, other.Q), P.mul(other.P, self.Q)),
                                P.mul(self.Q, other.Q))

    def __str__(self):
        return f"({P.fmt(self.P)})/({P.fmt(self.Q)})"


ZERO = RationalFunction((), (1,))


def _recurrence(n, numerators, denominators):
    """Numerator/denominator polynomials of ``c1/(d1 + c2/(d2 + ...))``.

    ``numerators[k]`` is a Fraction; ``denominators[k]`` is ``(lead, const)``
    meaning ``lead*z + const``.
    """
    A_prev, A = (Fraction(1),), ()
    B_prev, B = (), (Fraction(1),)
    for k in range(n):
        lead, const = denominators[k]
        c = numerators[k]
        A_prev, A = A, P.add(P.mul_linear(A, const, lead), P.scale(A_prev, c))
        B_prev, B = B, P.add(P.mul_linear(B, const, lead), P.scale(B_prev, c))
    return A, B


def approximant(cf: Union[SFraction, JFraction], n: int) -> RationalFunction:
    """The ``n``-th approximant ``w_n`` as a reduced rational function."""
    if n < 0 or n > len(cf):
        raise IndexOutOfRange(f"n={n} outside 0..{len(cf)}")
    if n == 0:
        return ZERO
    nums = [cf.a[0]] + [-x for x in cf.a[1:n]]
    if isinstance(cf, JFraction):
        dens = [(1, b) for b in cf.b[:n]]
    else:
        dens = [(1, 0) if k % 2 == 0 else (0, 1) for k in range(n)]
    A, B = _recurrence(n, nums, dens)
    return RationalFunction(A, B)


def contract_s_to_j(s: SFraction) -> JFraction:
    """J-fraction whose ``n``-th approximant is the S-fraction's ``2n``-th.

    Uses ``a1, a2 a3, a4 a5, ...`` over ``z - a2, z - a3 - a4, z - a5 - a6, ...``;
    an odd trailing S coefficient is dropped.
    """
    a = s.a
    if len(a) < 2:
        raise TooShort("contraction needs at least two S-fraction coefficients")
    m = len(a) // 2
    ja = [a[0]] + [a[2 * k - 1] * a[2 * k] for k in range(1, m)]
    jb = [-a[1]] + [-(a[2 * k] + a[2 * k + 1]) for k in range(1, m)]
    return JFraction(ja, jb)


def moments_to_sfraction(mu: Sequence, count: int) -> SFraction:
    """S-fraction coefficients ``a_1..a_count`` of ``sum mu_k / z^(k+1)``.

    Peels the moment series one level at a time: writing
    ``T_0 = sum mu_k X^k`` and ``T_j = a_{j+1} / (1 - X T_{j+1})``, each
    ``a_{j+1}`` is the constant term of ``T_j``.  A zero constant term means a
    vanishing Hankel determinant.
    """
    mu = _fracs(mu)
    if count < 1:
        raise ValueError("count must be at least 1")
    if len(mu) < count + 1:
        raise ValueError(f"need at least {count + 1} moments, got {len(mu)}")
    T = Series(mu)
    coeffs = []
    for j in range(count):
        if T[0] == 0:
            raise DegenerateMoments(
                f"Hankel determinant vanishes at level {j + 1}", partial=coeffs)
        coeffs.append(T[0])
        if j + 1 < count:
            r = recip(T)
            T = Series(-T[0] * c for c in r.coeffs[1:])
    out = SFraction(coeffs)
    if not out.is_stieltjes:
        warnings.warn("S-fraction has a nonpositive coefficient; moments are not Stieltjes",
                      NotStieltjesWarning, stacklevel=2)
    return out


def taylor_at_infinity(w: RationalFunction, N: int) -> Series:
    """Coefficients ``c_0..c_N`` with ``w(z) = sum c_k / z^(k+1)``."""
    p, q = w.P, w.Q
    dq = P.degree(q)
    if P.degree(p) >= dq:
        raise NotProperAtInfinity("numerator degree must be below denominator degree")
    # in X = 1/z: w = X * p~(X) / q~(X), with q~ the reversed denominator
    qr = [q[dq - i] for i in range(dq + 1)]
    pr = [p[dq - 1 - i] if 0 <= dq - 1 - i < len(p) else Fraction(0) for i in range(N + 1)]
    c = []
    for k in range(N + 1):
        s = pr[k] - sum((qr[j] * c[k - j] for j in range(1, min(k, dq) + 1)), Fraction(0))
        c.append(s / qr[0])
    return Series(c)


def _solve(matrix, rhs):
    """Exact Gaussian elimination with pivoting on nonzero entries."""
    n = len(rhs)
    M = [list(row) + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise SingularSystem("Hankel system is singular")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] * inv
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def pade_from_moments(mu: Sequence, n: int) -> RationalFunction:
    """``[n-1, n]`` Pade approximant at infinity of ``sum mu_k / z^(k+1)``."""
    mu = _fracs(mu)
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(mu) < 2 * n:
        raise ValueError(f"need at least {2 * n} moments")
    # monic Q = z^n + sum q_j z^j; the 1/z^(i+1) terms of Q*f vanish for i < n
    H = [[mu[i + j] for j in range(n)] for i in range(n)]
    q = _solve(H, [-mu[i + n] for i in range(n)]) + [Fraction(1)]
    num = [sum((q[j] * mu[j - m - 1] for j in range(m + 1, n + 1)), Fraction(0))
           for m in range(n)]
    return RationalFunction(num, q)


def laguerre(n: int) -> tuple:
    """``L_n(x) = sum_k (-1)^k/k! C(n,k) x^k``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return P.poly(Fraction((-1) ** k * comb(n, k), factorial(k)) for k in range(n + 1))


def a_coefficient(n: int, k: int) -> Fraction:
    """``a_{n,k} = sum_{j=k}^n (-1)^j/j! C(n,j) (j-k)!`` (numerator coefficients)."""
    return sum((Fraction((-1) ** j * comb(n, j) * factorial(j - k), factorial(j))
                for j in range(k, n + 1)), Fraction(0))


def prime_w_closed_form(n: int) -> RationalFunction:
    """Closed form of the ``n``-th prime approximant via Laguerre polynomials."""
    if n < 1:
        raise ValueError("n must be at least 1")
    sign_fact = (-1) ** n * factorial(n)
    Q = P.scale(laguerre(n), sign_fact)
    num = P.scale(P.poly(a_coefficient(n, k) for k in range(1, n + 1)), sign_fact)
    return RationalFunction(num, Q)


NAMED_KINDS = ("prime-S", "prime-J", "expint-S", "expint-J")


def make_named_fraction(kind: str, depth: int, n: int = 0):
    """Build the prime or exponential-integral fraction to ``depth`` terms.

    ``expint-*`` with ``n`` is the fraction for moments ``(k+n)!/n!``;
    ``n = 0`` gives the prime fractions.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "prime-S":
        kind, n = "expint-S", 0
    elif kind == "prime-J":
        kind, n = "expint-J", 0
    if kind == "expint-S":
        # 1, n+1, 1, n+2, 2, n+3, 3, ...
        a = [1] + [(n + (k + 1) // 2) if k % 2 else k // 2 for k in range(1, depth)]
        return SFraction(a)
    if kind == "expint-J":
        a = [1] + [k * (n + k) for k in range(1, depth)]
        b = [-(n + 2 * k + 1) for k in range(depth)]
        return JFraction(a, b)
    raise ValueError(f"unknown fraction kind {kind!r}; expected one of {NAMED_KINDS}")


def eval_backward(cf: Union[SFraction, JFraction], n: int, z: float) -> float:
    """Float value of ``w_n(z)`` by the backward (innermost-first) recurrence."""
    if n < 0 or n > len(cf):
        raise IndexOutOfRange(f"n={n} outside 0..{len(cf)}")
    if n == 0:
        return 0.0
    a = [float(x) for x in cf.a[:n]]
    if isinstance(cf, JFraction):
        dens = [z + float(b) for b in cf.b[:n]]
    else:
        dens = [z if k % 2 == 0 else 1.0 for k in range(n)]
    tail = dens[n - 1]
    for k in range(n - 2, -1, -1):
        tail = dens[k] - a[k + 1] / tail
    return a[0] / tail
