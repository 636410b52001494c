"""Double-precision special functions: li, the scaled function
``g(u) = li(e^u)/e^u``, E1, digamma and real harmonic numbers, and p_n(t)."""
from __future__ import annotations

import math
import sys
import warnings
from fractions import Fraction

from .errors import CfracPole, DomainError, PrecisionLossWarning
from .series import p_poly

GAMMA_DIGITS = "0.577215664901532860606512090082"
EULER_GAMMA = float(GAMMA_DIGITS)
EXP_GAMMA = math.exp(EULER_GAMMA)

EPS = sys.float_info.epsilon
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def precision_lost(predicted: float, reference: float) -> bool:
    """True when a quantity of size ``predicted`` sits below the rounding
    floor of ``reference``: ``|predicted| < 1e3 * eps * |reference|``."""
    return abs(predicted) < 1e3 * EPS * abs(reference)


def _check_real(x):
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise DomainError(f"non-finite argument {x}")
    return x


def _li_series(L: float) -> float:
    # gamma + ln|L| + sum L^k / (k k!)
    term = 1.0
    total = 0.0
    parts = []
    k = 0
    while True:
        k += 1
        term *= L / k
        part = term / k
        parts.append(part)
        total += part
        if k > abs(L) and abs(part) <= 1e-17 * abs(total):
            break
    return EULER_GAMMA + math.log(abs(L)) + math.fsum(parts)


def li(x) -> float:
    """Principal-value logarithmic integral."""
    x = _check_real(x)
    if x == 0.0:
        return 0.0
    if x < 0.0 or x == 1.0:
        raise DomainError(f"li undefined at {x}")
    L = math.log(x)
    if L < -1.0:
        return -e1(-L)
    return _li_series(L)


def e1(x) -> float:
    """Exponential integral ``E1(x) = -li(e^-x)`` for ``x > 0``."""
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError("e1 needs x > 0")
    if x <= 1.0:
        return -_li_series(-x)
    # modified Lentz on e^x E1(x) = 1/(x+1-) 1/(x+3-) 4/(x+5-) ...
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 10_000):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < EPS:
            break
    return h * math.exp(-x)


def _stirlerr(n: int) -> float:
    # ln n! - ((n + 1/2) ln n - n + ln sqrt(2 pi)), n > 20
    nn = float(n) * n
    return (1 / 12 - (1 / 360 - (1 / 1260 - (1 / 1680 - 1 / (1188 * nn)) / nn) / nn) / nn) / n


def _bd0(x: float, m: float) -> float:
    # x ln(x/m) + m - x without cancellation
    if abs(x - m) < 0.1 * (x + m):
        v = (x - m) / (x + m)
        s = (x - m) * v
        ej = 2 * x * v
        v2 = v * v
        j = 1
        while True:
            ej *= v2
            s1 = s + ej / (2 * j + 1)
            if s1 == s:
                return s1
            s = s1
            j += 1
    return x * math.log(x / m) + m - x


def _poisson_at(k: int, u: float) -> float:
    """``u^k e^-u / k!`` accurate to a few ulps (saddle-point form for k > 20)."""
    if k <= 20:
        return math.pow(u, k) * math.exp(-u) / math.factorial(k)
    return math.exp(-_stirlerr(k) - _bd0(float(k), u)) / math.sqrt(2 * math.pi * k)


def li_scaled(u) -> float:
    """``g(u) = li(e^u) / e^u`` without forming ``e^u``.

    Sums ``(gamma + ln u) e^-u + sum_{k>=1} P(k; u)/k`` with the Poisson
    weights ``P(k; u) = u^k e^-u / k!`` generated outward from the mode.
    """
    u = _check_real(u)
    if u <= 0.0:
        raise DomainError("li_scaled needs u > 0")
    k0 = max(1, int(math.floor(u)))
    p0 = _poisson_at(k0, u)
    terms = [p0 / k0]
    p = p0
    for k in range(k0, 1, -1):
        p *= k / u  # P(k-1)
        t = p / (k - 1)
        terms.append(t)
        if t < 1e-18 * terms[0]:
            break
    p = p0
    k = k0
    while True:
        k += 1
        p *= u / k
        t = p / k
        terms.append(t)
        if t < 1e-18 * terms[0]:
            break
    head = (EULER_GAMMA + math.log(u)) * math.exp(-u)
    return math.fsum(terms) + head


def digamma(x) -> float:
    """Psi(x) for x > 0: shift up to x >= 10, then the Stirling-type series."""
    x = _check_real(x)
    if x <= 0.0:
        raise DomainError("digamma needs x > 0")
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    r = 1.0 / (x * x)
    tail = r * (1 / 12 - r * (1 / 120 - r * (1 / 252 - r * (1 / 240 - r * (1 / 132 - r * 691 / 32760)))))
    return math.log(x) - 0.5 / x - tail + shift


def harmonic_real(x) -> float:
    """``H_x = Psi(x + 1) + gamma`` for x > -1."""
    x = _check_real(x)
    if x <= -1.0:
        raise DomainError("harmonic_real needs x > -1")
    return digamma(x + 1.0) + EULER_GAMMA


def p_eval(n: int, t, method: str = "sum") -> float:
    """``p_n(t) = n! sum_{k<=n} t^k/k!`` by exact Horner or by its continued fraction.

    The fraction is ``t^(n+1)/(t-n +) n/(t-n+2 +) 2(n-1)/(t-n+4 +) ... n/(t+n)``.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    t = _check_real(t)
    if method == "sum":
        acc = Fraction(0)
        tt = Fraction(t)
        for c in reversed(p_poly(n)):
            acc = acc * tt + c
        return float(acc)
    if method != "cfrac":
        raise ValueError(f"unknown method {method!r}")
    if t <= 0.0:
        raise DomainError("continued fraction form needs t > 0")
    tail = t + n
    for k in range(n, 0, -1):
        if tail == 0.0:
            raise CfracPole(f"continued fraction for p_{n} has a pole at t={t}")
        tail = (t - n + 2 * (k - 1)) + k * (n + 1 - k) / tail
    if tail == 0.0:
        raise CfracPole(f"continued fraction for p_{n} has a pole at t={t}")
    return t ** (n + 1) / tail


def f_n_eval(n: int, u) -> float:
    """``f_n(u) = u^n/n! (g(u) - sum_{k=1}^n (k-1)!/u^k)``.

    Emits :class:`PrecisionLossWarning` when the expected size ``n!/u^(n+1)``
    of the bracket drops under the rounding floor of ``g(u)``.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    u = _check_real(u)
    if u <= 0.0:
        raise DomainError("f_n_eval needs u > 0")
    g = li_scaled(u)
    if n == 0:
        return g
    if not f_n_precision_ok(n, u, g):
        warnings.warn(f"f_{n}({u}) has lost most of its significant digits",
                      PrecisionLossWarning, stacklevel=2)
    partial = math.fsum(math.factorial(k - 1) / u ** k for k in range(1, n + 1))
    return u ** n / math.factorial(n) * (g - partial)


def f_n_precision_ok(n: int, u: float, g: float | None = None) -> bool:
    if g is None:
        g = li_scaled(u)
    return not precision_lost(math.factorial(n) / u ** (n + 1), g)


def F_n_eval(n: int, x) -> float:
    """``F_n(x) = f_n(ln x)``."""
    x = _check_real(x)
    if x <= 1.0:
        raise DomainError("F_n_eval needs x > 1")
    return f_n_eval(n, math.log(x))
