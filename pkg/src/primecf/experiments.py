"""Experiment commands.  Each returns a :class:`CsvTable` (or a fit record)
that the CLI and ``scripts/reproduce.py`` write to disk."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import poly as P
from .contfrac import (JFraction, approximant, eval_backward, make_named_fraction,
                       prime_w_closed_form)
from .errors import DomainError, GridOutOfRange, OutOfRange, PrecisionLoss
from .primes import (PrimeTable, SieveConfig, inequality_chain, mertens_grid, read_cache,
                     rh_partial_sums, sieve, write_cache)
from .series import SequenceName, gen_sequence
from .special import EULER_GAMMA, digamma, harmonic_real, li, li_scaled, precision_lost

MAX_EXACT_ORDER = 12
MAX_FLOAT_ORDER = 3
MAX_PI_ORDER = 4


# -- plumbing ----------------------------------------------------------------

def format_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if v is None:
        return ""
    return str(v)


@dataclass
class CsvTable:
    header: list
    rows: list = field(default_factory=list)

    def add(self, *row) -> None:
        if len(row) != len(self.header):
            raise ValueError(f"row has {len(row)} cells, header has {len(self.header)}")
        self.rows.append(list(row))

    def column(self, name: str) -> list:
        i = self.header.index(name)
        return [r[i] for r in self.rows]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        for r in self.rows:
            w.writerow([format_cell(v) for v in r])
        return buf.getvalue()

    def write(self, path) -> None:
        Path(path).write_text(self.to_csv())


@dataclass(frozen=True)
class Grid:
    start: float
    stop: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if self.spacing not in ("log", "lin"):
            raise DomainError(f"spacing must be log or lin, got {self.spacing!r}")
        if self.points < 1:
            raise DomainError("grid needs at least one point")
        if self.points > 1 and not self.start < self.stop:
            raise DomainError("grid must be strictly increasing")
        if self.spacing == "log" and self.start <= 0:
            raise DomainError("log grid needs a positive start")

    @classmethod
    def parse(cls, text: str) -> "Grid":
        parts = text.split(":")
        if len(parts) not in (3, 4):
            raise DomainError(f"grid {text!r} is not start:stop:points[:log|lin]")
        try:
            start, stop, points = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise DomainError(f"bad grid {text!r}") from None
        spacing = parts[3] if len(parts) == 4 else "log"
        return cls(start, stop, points, spacing)

    def values(self) -> list[float]:
        if self.points == 1:
            return [self.start]
        if self.spacing == "log":
            v = np.geomspace(self.start, self.stop, self.points)
        else:
            v = np.linspace(self.start, self.stop, self.points)
        v[0], v[-1] = self.start, self.stop
        return [float(x) for x in v]

    def integers(self) -> list[int]:
        """Rounded grid values with duplicates removed."""
        out: list[int] = []
        for x in self.values():
            k = int(round(x))
            if not out or k > out[-1]:
                out.append(k)
        return out

    def check_within(self, lo: float, hi: float) -> None:
        if self.start < lo or self.stop > hi:
            raise GridOutOfRange(f"grid [{self.start}, {self.stop}] leaves [{lo}, {hi}]")


@dataclass
class ExperimentConfig:
    command: str
    grid: Optional[Grid] = None
    n: Optional[int] = None
    limit: int = 10 ** 8
    out: Optional[str] = None
    cache: Optional[str] = None
    target: str = "li"
    on_precision_loss: str = "flag"  # or "abort"
    names: tuple = ("D", "A", "I", "Dp", "G", "J")
    count: int = 12
    kind: str = "prime-J"
    depth: int = 12
    workers: int = 1

    def __post_init__(self):
        if self.on_precision_loss not in ("flag", "abort"):
            raise DomainError("on_precision_loss must be flag or abort")
        if self.target not in ("li", "pi"):
            raise DomainError("target must be li or pi")


_PRIME_J = make_named_fraction("prime-J", MAX_EXACT_ORDER)


def _prime_w(n: int, u: float) -> float:
    return eval_backward(_PRIME_J, n, u) if n else 0.0


def _check_flag(flag: bool, policy: str, what: str) -> None:
    if flag and policy == "abort":
        raise PrecisionLoss(f"{what}: result below double-precision resolution")


def load_table(limit: int, cache: Optional[str] = None, needed: Sequence[float] = (),
               workers: int = 1) -> "PrimeTable | CachedCounts":
    """Prime table for ``limit``, or cached counts when the cache covers ``needed``."""
    if cache and Path(cache).exists():
        counts = read_cache(cache)
        if needed and all(math.floor(x) in counts for x in needed):
            return CachedCounts(counts)
    table = sieve(SieveConfig(limit, workers=workers))
    if cache:
        pairs = dict(table.checkpoints)
        pairs.update((math.floor(x), table.pi_of(x)) for x in needed if x <= limit)
        write_cache(cache, sorted(pairs.items()))
    return table


@dataclass(frozen=True)
class CachedCounts:
    """``pi`` lookups backed only by a checkpoint cache."""

    counts: dict

    def pi_of(self, x) -> int:
        k = math.floor(x)
        if k not in self.counts:
            raise OutOfRange(f"pi({k}) is not in the cache")
        return self.counts[k]


# -- commands ----------------------------------------------------------------

def cmd_sequences(names: Iterable = ("D", "A", "I", "Dp", "G", "J"), N: int = 10) -> CsvTable:
    seqs = [SequenceName.parse(s) for s in names]
    cols = [gen_sequence(s, N) for s in seqs]
    t = CsvTable(["n"] + [s.value for s in seqs])
    for k in range(N + 1):
        t.add(k, *(c[k] for c in cols))
    return t


def cmd_cf(kind: str = "prime-J", depth: int = 8, n_max: Optional[int] = None,
           n_param: int = 0) -> CsvTable:
    """Coefficients and reduced ``P_k/Q_k`` of a named fraction.

    ``P`` and ``Q`` are ``;``-separated coefficient lists, constant term first.
    """
    cf = make_named_fraction(kind, depth, n_param)
    n_max = depth if n_max is None else min(n_max, depth)
    if kind == "prime-J" and n_max > MAX_EXACT_ORDER:
        raise DomainError(f"closed-form check is limited to n <= {MAX_EXACT_ORDER}")
    t = CsvTable(["k", "a", "b", "P", "Q"])
    for k in range(1, depth + 1):
        b = cf.b[k - 1] if isinstance(cf, JFraction) else None
        P_str = Q_str = None
        if k <= n_max:
            w = approximant(cf, k)
            if kind == "prime-J" and w != prime_w_closed_form(k):
                raise AssertionError(f"approximant {k} disagrees with the Laguerre closed form")
            P_str, Q_str = P.fmt(w.P), P.fmt(w.Q)
        t.add(k, cf.a[k - 1], b, P_str, Q_str)
    return t


def error_row(n: int, u: float) -> tuple:
    g = li_scaled(u)
    w = _prime_w(n, u)
    err = g - w
    scale = math.factorial(n) ** 2
    predicted = scale / u ** (2 * n + 1)
    return g, w, err, err * u ** (2 * n + 1) / scale, precision_lost(predicted, g)


def cmd_error_table(n_max: int, grid: Grid, target: str = "li", table=None,
                    policy: str = "flag", L: str = "log") -> CsvTable:
    """``g(u) - w_n(u)`` and the scaled ratio ``c_n(u)`` over a u-grid.

    ``target='pi'`` switches to :func:`cmd_pi_error` with ``grid`` read as an x-grid.
    """
    if target == "pi":
        if table is None:
            raise DomainError("pi target needs a prime table")
        return cmd_pi_error(table, grid, n_max, L=L, policy=policy)
    if not 0 <= n_max <= MAX_FLOAT_ORDER:
        raise DomainError(f"double-precision error tables stop at n = {MAX_FLOAT_ORDER}")
    grid.check_within(20.0, 100.0)
    t = CsvTable(["n", "u", "g", "w_n", "err", "c_n", "precision_loss"])
    for n in range(n_max + 1):
        for u in grid.values():
            g, w, err, c, flag = error_row(n, u)
            _check_flag(flag, policy, f"n={n}, u={u}")
            t.add(n, u, g, w, err, c, flag)
    return t


_L_VARIANTS: dict[str, Callable[[float], float]] = {
    "log": math.log,
    "harmonic": lambda x: harmonic_real(x) - EULER_GAMMA,
    "digamma": digamma,
}


def cmd_pi_error(table, grid: Grid, n_max: int = 4, L: str = "log",
                 policy: str = "flag") -> CsvTable:
    """``pi(x)`` against ``li(x)`` and ``x w_n(L(x))`` over an x-grid.

    ``A = ln x - x/pi(x)`` is the Legendre quantity; read against ``log_x``
    the same column is ``A(e^u)``.
    """
    if not 1 <= n_max <= MAX_PI_ORDER:
        raise DomainError(f"n_max must lie in 1..{MAX_PI_ORDER}")
    if L not in _L_VARIANTS:
        raise DomainError(f"unknown L variant {L!r}")
    if grid.start < 1e4:
        raise GridOutOfRange("pi error grid starts at 1e4")
    Lf = _L_VARIANTS[L]
    header = ["x", "log_x", "L", "pi", "li", "A", "err_li"]
    for n in range(1, n_max + 1):
        header += [f"approx_{n}", f"err_{n}"]
    t = CsvTable(header)
    for x in grid.values():
        pi = table.pi_of(x)
        lx = Lf(x)
        row = [x, math.log(x), lx, pi, li(x), math.log(x) - x / pi, abs(pi - li(x))]
        for n in range(1, n_max + 1):
            a = x * _prime_w(n, lx)
            row += [a, abs(pi - a)]
        t.add(*row)
    return t


@dataclass(frozen=True)
class SlopeFit:
    n: int
    slope: float
    intercept: float
    u_max: float
    c_max: float

    @property
    def target_slope(self) -> int:
        return -(2 * self.n + 1)

    @property
    def target_intercept(self) -> float:
        return 2 * math.lgamma(self.n + 1)

    def predicted_c(self, u: float) -> float:
        """``c_n(u)`` implied by the fitted power law."""
        return math.exp(self.intercept - self.target_intercept) * u ** (self.slope + 2 * self.n + 1)

    def table(self) -> CsvTable:
        t = CsvTable(["n", "slope", "intercept", "target_slope", "target_intercept", "u_max", "c_max"])
        t.add(self.n, self.slope, self.intercept, self.target_slope, self.target_intercept,
              self.u_max, self.c_max)
        return t


def fit_loglog(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Least-squares line through ``(ln x, ln |y|)``; returns (slope, intercept)."""
    lx = np.log(np.asarray(xs, dtype=float))
    ly = np.log(np.abs(np.asarray(ys, dtype=float)))
    slope, intercept = np.polyfit(lx, ly, 1)
    return float(slope), float(intercept)


def cmd_slope(n: int, grid: Grid) -> SlopeFit:
    """Fit ``ln|g(u) - w_n(u)|`` against ``ln u``; any precision flag aborts."""
    if not 0 <= n <= MAX_FLOAT_ORDER:
        raise DomainError(f"slope fits stop at n = {MAX_FLOAT_ORDER}")
    us = grid.values()
    errs, c = [], None
    for u in us:
        _, _, err, c, flag = error_row(n, u)
        if flag:
            raise PrecisionLoss(f"n={n}, u={u}: error below double-precision resolution")
        errs.append(err)
    slope, intercept = fit_loglog(us, errs)
    return SlopeFit(n, slope, intercept, us[-1], c)


def cmd_mertens(table, grid: Grid) -> CsvTable:
    xs = grid.values()
    t = CsvTable(["x", "pi", "M", "r", "r_minus_1"])
    for x, m in zip(xs, mertens_grid(table, xs)):
        t.add(x, table.pi_of(x), m.product, m.scaled, m.scaled - 1.0)
    return t


def cmd_rh(table, ns: Sequence[int]) -> CsvTable:
    """``pi(n)`` against ``sum 1/(H_k - gamma)``, and ``H_n - n/pi(n)``."""
    sums = rh_partial_sums(list(ns))
    t = CsvTable(["n", "pi", "rh_sum", "ratio", "H_n", "H_minus_n_over_pi", "one_plus_gamma"])
    for n, s in zip(ns, sums):
        pi = table.pi_of(n)
        H = harmonic_real(n)
        t.add(n, pi, s, abs(pi - s) / (math.sqrt(n) * H), H, H - n / pi, 1.0 + EULER_GAMMA)
    return t


def ramanujan_s(u: float, power: int = 6) -> tuple[float, bool]:
    """``(g(u-1) - u g(u)^2) u^power`` and its precision flag."""
    g0, g1 = li_scaled(u - 1.0), li_scaled(u)
    d = g0 - u * g1 * g1
    return d * u ** power, precision_lost(u ** -5, g0)


def cmd_ramanujan(grid: Grid, policy: str = "flag") -> CsvTable:
    """Surrogate of Ramanujan's inequality with ``li(x)/x`` in place of ``pi(x)/x``.

    ``s`` scales the difference by ``u^6``; ``s_order5`` by ``u^5``, the order
    at which the difference actually decays.
    """
    grid.check_within(30.0, 80.0)
    t = CsvTable(["u", "g_u_minus_1", "g_u", "diff", "s", "s_order5", "precision_loss"])
    for u in grid.values():
        s6, flag = ramanujan_s(u, 6)
        _check_flag(flag, policy, f"u={u}")
        g0, g1 = li_scaled(u - 1.0), li_scaled(u)
        t.add(u, g0, g1, g0 - u * g1 * g1, s6, s6 / u, flag)
    return t


def estimate_coefficient(samples: Sequence[tuple[float, float]], partial: Sequence, n: int) -> float:
    """Empirical ``a_n`` from ``f(u) ~ sum a_k/u^(k+1)`` at the largest sample."""
    if not samples:
        raise DomainError("need at least one sample")
    u, f = max(samples, key=lambda s: s[0])
    rest = math.fsum(float(a) / u ** (k + 1) for k, a in enumerate(list(partial)[:n]))
    return (f - rest) * u ** (n + 1)


def cmd_chain(ns: Sequence[int]) -> CsvTable:
    t = CsvTable(["n"] + [f"q{i}" for i in range(1, 7)] + [f"holds_{i}" for i in range(1, 6)])
    for n in ns:
        r = inequality_chain(n)
        t.add(n, *r.values, *r.holds)
    return t
