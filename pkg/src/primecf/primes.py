"""Segmented odd-only sieve, prime counting and the prime sums built on it."""
from __future__ import annotations

import math
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .errors import DomainError, LimitTooLarge, OutOfRange
from .special import EULER_GAMMA, EXP_GAMMA, li

MAX_LIMIT = 2 ** 34
EXACT_RH_MAX = 10 ** 5
CACHE_MAGIC = b"PCF1"


@dataclass(frozen=True)
class SieveConfig:
    limit: int
    segment_size: int = 2 ** 20  # odd numbers per segment
    workers: int = 1

    def __post_init__(self):
        if int(self.limit) != self.limit:
            raise DomainError("limit must be an integer")
        if self.limit > MAX_LIMIT:
            raise LimitTooLarge(f"limit {self.limit} exceeds {MAX_LIMIT}")
        if self.limit < 2:
            raise DomainError("limit must be at least 2")
        if self.segment_size <= 0 or self.segment_size % 64:
            raise DomainError("segment_size must be a positive multiple of 64")
        if self.workers < 1:
            raise DomainError("workers must be at least 1")


def simple_sieve(limit: int) -> np.ndarray:
    """All primes ``<= limit`` from one flat Eratosthenes table."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p::p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def _sieve_segment(i0: int, i1: int, base: np.ndarray) -> np.ndarray:
    """Primes among the odd numbers ``2i+1`` for ``i0 <= i < i1``."""
    seg = np.ones(i1 - i0, dtype=bool)
    lo, hi = 2 * i0 + 1, 2 * i1 - 1
    for p in base:
        p = int(p)
        pp = p * p
        if pp > hi:
            break
        start = max(pp, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        seg[(start - 1) // 2 - i0::p] = False
    if i0 == 0:
        seg[0] = False  # 1 is not prime
    return 2 * (np.flatnonzero(seg).astype(np.int64) + i0) + 1


class PrimeTable:
    """Immutable table of the primes up to ``limit`` with counting queries."""

    def __init__(self, limit: int, primes: np.ndarray, checkpoints: Sequence[tuple[int, int]] = ()):
        self.limit = int(limit)
        dtype = np.uint32 if limit < 2 ** 32 else np.uint64
        self.primes = np.ascontiguousarray(primes, dtype=dtype)
        self.primes.setflags(write=False)
        self.checkpoints = tuple((int(x), int(c)) for x, c in checkpoints)
        self._log_terms = None

    def __len__(self):
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return (int(p) for p in self.primes)

    def _floor(self, x) -> int:
        n = math.floor(x)
        if n > self.limit:
            raise OutOfRange(f"x={x} beyond sieve limit {self.limit}")
        return n

    def pi(self, n: int) -> int:
        return int(np.searchsorted(self.primes, max(n, 0), side="right"))

    def pi_of(self, x) -> int:
        """Exact ``pi(floor(x))``."""
        return self.pi(self._floor(x))

    def density(self, x) -> float:
        return self.pi_of(x) / x

    def log_terms(self) -> np.ndarray:
        """``ln(1 - 1/p)`` per prime, cached on first use."""
        if self._log_terms is None:
            t = np.log1p(-1.0 / self.primes.astype(np.float64))
            t.setflags(write=False)
            self._log_terms = t
        return self._log_terms


def sieve(config: SieveConfig) -> PrimeTable:
    """Sieve up to ``config.limit``; output is independent of ``workers``."""
    limit = config.limit
    base = simple_sieve(math.isqrt(limit))[1:]  # odd base primes
    n_odd = (limit + 1) // 2  # odd numbers 1, 3, ..., <= limit
    S = config.segment_size
    bounds = [(i0, min(i0 + S, n_odd)) for i0 in range(0, n_odd, S)]

    def work(b):
        return _sieve_segment(b[0], b[1], base)

    if config.workers > 1:
        with ThreadPoolExecutor(config.workers) as pool:
            chunks = list(pool.map(work, bounds))  # map keeps segment order
    else:
        chunks = [work(b) for b in bounds]
    checkpoints, total = [], 1
    for (_, i1), c in zip(bounds, chunks):
        total += len(c)
        checkpoints.append((min(2 * i1 - 1, limit), total))
    primes = np.concatenate([np.array([2], dtype=np.int64)] + chunks)
    return PrimeTable(limit, primes, checkpoints)


def pi_of(table: PrimeTable, x) -> int:
    return table.pi_of(x)


@dataclass(frozen=True)
class MertensAccumulator:
    x: float
    log_sum: float
    product: float
    scaled: float


def _mertens_from(x, log_sum) -> MertensAccumulator:
    M = math.exp(log_sum)
    return MertensAccumulator(x, log_sum, M, EXP_GAMMA * M * math.log(x))


def mertens(table: PrimeTable, x) -> MertensAccumulator:
    """``prod_{p<=x} (1 - 1/p)`` and ``r(x) = e^gamma M(x) ln x``."""
    return mertens_grid(table, [x])[0]


def mertens_grid(table: PrimeTable, xs: Sequence) -> list[MertensAccumulator]:
    """Mertens values at many ``x`` with one compensated pass over the primes."""
    for x in xs:
        if x < 2:
            raise OutOfRange("mertens needs x >= 2")
        table._floor(x)
    terms = table.log_terms()
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    out: list = [None] * len(xs)
    chunk_sums, prev = [], 0
    for i in order:
        k = table.pi_of(xs[i])
        chunk_sums.append(math.fsum(terms[prev:k]))
        prev = k
        out[i] = _mertens_from(xs[i], math.fsum(chunk_sums))
    return out


_DYADIC_BITS = 192


def _exact_harmonic_floats(n: int) -> np.ndarray:
    """``H_1..H_n`` correctly rounded.

    ``H_k`` is bracketed by the dyadic rationals ``lo/2^P <= H_k < (lo+k)/2^P``
    with ``lo = sum floor(2^P/j)``.  When both ends round to the same double
    that double is the correctly rounded ``H_k``; otherwise the exact
    rational is formed.
    """
    one = 1 << _DYADIC_BITS
    out = np.empty(n)
    lo = 0
    for k in range(1, n + 1):
        lo += one // k
        a, b = lo / one, (lo + k) / one
        out[k - 1] = a if a == b else float(_harmonic_fraction(k))
    return out


def _harmonic_fraction(k: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def _float_harmonic_chunks(n: int, chunk: int = 1 << 16) -> Iterator[np.ndarray]:
    """``H_k`` for ``k = 1..n`` in chunks, carrying the running total exactly-rounded."""
    base_parts: list[float] = []
    base = 0.0
    for k0 in range(1, n + 1, chunk):
        k1 = min(k0 + chunk, n + 1)
        inv = 1.0 / np.arange(k0, k1, dtype=np.float64)
        yield base + np.cumsum(inv)
        base_parts.append(math.fsum(inv))
        base = math.fsum(base_parts)


def rh_partial_sum(n: int, method: str = "auto") -> float:
    """``sum_{k=1}^n 1/(H_k - gamma)``.

    ``method`` is ``exact`` (rational ``H_k``, n up to ``EXACT_RH_MAX``),
    ``float`` (chunked compensated recurrence) or ``auto``.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if method == "auto":
        method = "exact" if n <= EXACT_RH_MAX else "float"
    if method == "exact":
        if n > EXACT_RH_MAX:
            raise DomainError(f"exact regime is limited to n <= {EXACT_RH_MAX}")
        return math.fsum(1.0 / (_exact_harmonic_floats(n) - EULER_GAMMA))
    if method != "float":
        raise ValueError(f"unknown method {method!r}")
    return math.fsum(math.fsum(1.0 / (H - EULER_GAMMA)) for H in _float_harmonic_chunks(n))


def rh_partial_sums(ns: Sequence[int]) -> list[float]:
    """``rh_partial_sum`` at several ``n`` using one pass of the float regime
    beyond ``EXACT_RH_MAX``."""
    out: dict[int, float] = {}
    big = sorted({n for n in ns if n > EXACT_RH_MAX})
    for n in ns:
        if n <= EXACT_RH_MAX:
            out[n] = rh_partial_sum(n)
    if big:
        parts, pos, j = [], 1, 0
        for H in _float_harmonic_chunks(big[-1]):
            end = pos + len(H)
            while j < len(big) and big[j] < end:
                out[big[j]] = math.fsum(parts + [math.fsum(1.0 / (H[: big[j] - pos + 1] - EULER_GAMMA))])
                j += 1
            parts.append(math.fsum(1.0 / (H - EULER_GAMMA)))
            pos = end
    return [out[n] for n in ns]


def log_partial_sum(n: int) -> float:
    """``sum_{k=2}^n 1/ln k``."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return math.fsum(1.0 / np.log(np.arange(2, n + 1, dtype=np.float64)))


CHAIN_LABELS = (
    "sum_{k=3}^{n+1} 1/ln k",
    "sum_{k=2}^{n} 1/(H_k-gamma)",
    "li(n+1)-li(2)",
    "sum_{k=2}^{n} 1/ln k",
    "li(n)",
    "sum_{k=1}^{n-1} 1/(H_k-gamma)",
)


@dataclass(frozen=True)
class ChainReport:
    n: int
    values: tuple
    holds: tuple = field(init=False)
    gaps: tuple = field(init=False)

    def __post_init__(self):
        v = self.values
        object.__setattr__(self, "holds", tuple(a < b for a, b in zip(v, v[1:])))
        object.__setattr__(self, "gaps", tuple(b - a for a, b in zip(v, v[1:])))

    @property
    def all_true(self) -> bool:
        return all(self.holds)

    def as_dict(self) -> dict:
        return dict(zip(CHAIN_LABELS, self.values))


def inequality_chain(n: int) -> ChainReport:
    """The six-term chain from ``sum 1/ln k`` up to ``sum 1/(H_k - gamma)``.

    Each consecutive pair is reported as a boolean and a gap; values below
    ``n = 8`` are computed but not guaranteed to be ordered.
    """
    if n < 2:
        raise DomainError("n must be at least 2")
    rh_n = rh_partial_sum(n)
    rh_first = 1.0 / (1.0 - EULER_GAMMA)
    log_n = log_partial_sum(n)
    h_n = 1.0 / _harmonic_last_minus_gamma(n)
    values = (
        log_n + 1.0 / math.log(n + 1) - 1.0 / math.log(2),
        rh_n - rh_first,
        li(n + 1) - li(2),
        log_n,
        li(n),
        rh_n - h_n,
    )
    return ChainReport(n, values)


def _harmonic_last_minus_gamma(n: int) -> float:
    if n <= EXACT_RH_MAX:
        return float(_exact_harmonic_floats(n)[-1]) - EULER_GAMMA
    H = None
    for H in _float_harmonic_chunks(n):
        pass
    return float(H[-1]) - EULER_GAMMA


def pi_gaussian(table: PrimeTable, x) -> int:
    """Prime ideals of the Gaussian integers with norm ``<= x``.

    Split primes ``p = 1 mod 4`` give two ideals of norm ``p``, inert
    ``p = 3 mod 4`` one of norm ``p^2``, and 2 ramifies.
    """
    n = table._floor(x)
    if n < 2:
        return 0
    p = table.primes[: table.pi(n)]
    r = math.isqrt(n)
    q = table.primes[: table.pi(r)]
    return 2 * int(np.count_nonzero(p % 4 == 1)) + int(np.count_nonzero(q % 4 == 3)) + 1


def li_rhsum_gap(n: int) -> float:
    """``li(n) - sum_{k=1}^n 1/(H_k - gamma)``."""
    if n < 2:
        raise DomainError("gap is defined for n >= 2")
    return li(n) - rh_partial_sum(n)


def write_cache(path, pairs: Sequence[tuple[int, int]]) -> None:
    """Store ``(x, pi(x))`` pairs as little-endian u64 after the magic bytes."""
    body = b"".join(struct.pack("<QQ", int(x), int(c)) for x, c in pairs)
    Path(path).write_bytes(CACHE_MAGIC + body)


def read_cache(path) -> dict[int, int]:
    data = Path(path).read_bytes()
    if data[:4] != CACHE_MAGIC or (len(data) - 4) % 16:
        raise DomainError(f"{path} is not a checkpoint cache")
    return dict(struct.iter_unpack("<QQ", data[4:]))
