"""Reference values computed independently of ``primecf``.

Uses mpmath at 40 significant digits for every real quantity and a flat
(non-segmented) numpy sieve for prime counts.  Writes ``tests/data/oracle.json``;
the test suite reads tolerances and targets from that file.

    python scripts/oracle.py            # about two minutes
"""
from __future__ import annotations

import json
import math
import time
from pathlib import Path

import mpmath as mp
import numpy as np

mp.mp.dps = 40
OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "oracle.json"


def flat_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p::2 * p] = False
    return np.flatnonzero(flags)


def g(u):
    u = mp.mpf(u)
    return mp.li(mp.exp(u)) / mp.exp(u)


def prime_w(n: int, z):
    """n-th approximant of 1/(z-1-) 1/(z-3-) 4/(z-5-) ..., innermost first."""
    if n == 0:
        return mp.mpf(0)
    z = mp.mpf(z)
    tail = z - (2 * n - 1)
    for k in range(n - 1, 0, -1):
        tail = z - (2 * k - 1) - mp.mpf(k * k) / tail
    return 1 / tail


def fl(x) -> float:
    return float(x)


def main() -> None:
    t0 = time.time()
    o: dict = {"dps": mp.mp.dps}

    # special functions
    o["li"] = {repr(x): fl(mp.li(x)) for x in (0.01, 0.5, 2.0, 10.0, 1e3, 1e8, 1e20, 1e100, 1e300)}
    o["li_scaled"] = {repr(u): fl(g(u)) for u in
                      (0.1, math.log(2), 1.0, 5.0, 7.3, 10.0, 20.0, 20.5, 30.0, 50.0, 100.0, 300.0, 600.0)}
    o["e1"] = {repr(x): fl(mp.e1(x)) for x in (0.1, 0.5, 1.0, 1.5, 5.0, 50.0, 300.0)}
    o["digamma"] = {repr(x): fl(mp.digamma(x)) for x in (0.1, 0.5, 1.0, 3.25, 10.0, 50.0, 1e6)}
    o["f_n_50"] = {str(n): fl(mp.mpf(50) ** n / mp.factorial(n) *
                              (g(50) - mp.fsum(mp.factorial(k - 1) / mp.mpf(50) ** k for k in range(1, n + 1))))
                   for n in range(5)}

    # error law over u in [30, 90], 12 log-spaced points
    us = [30.0 * 3.0 ** (i / 11) for i in range(12)]
    us[-1] = 90.0
    law = {}
    for n in range(4):
        errs = [g(u) - prime_w(n, u) for u in us]
        slope, icpt = np.polyfit(np.log(us), [fl(mp.log(abs(e))) for e in errs], 1)
        scale = math.factorial(n) ** 2
        c = {repr(u): fl((g(u) - prime_w(n, u)) * mp.mpf(u) ** (2 * n + 1) / scale)
             for u in (20.0, 50.0, 90.0, 100.0)}
        law[str(n)] = {"slope": float(slope), "intercept": float(icpt), "c": c}
    o["error_law"] = {"grid": us, "n": law}

    # Ramanujan surrogate
    o["ramanujan"] = {repr(u): {"s6": fl((g(u - 1) - g(u) ** 2 * u) * mp.mpf(u) ** 6),
                                "s5": fl((g(u - 1) - g(u) ** 2 * u) * mp.mpf(u) ** 5)}
                      for u in (30.0, 40.0, 50.0, 60.0, 70.0, 80.0)}
    o["estimate_a3_u80"] = fl((g(80) - 1 / mp.mpf(80) - 1 / mp.mpf(80) ** 2 - 2 / mp.mpf(80) ** 3) * mp.mpf(80) ** 4)
    print(f"real oracles done in {time.time() - t0:.1f}s")

    # primes
    primes = flat_sieve(10 ** 8)
    pi = {str(10 ** k): int(np.searchsorted(primes, 10 ** k, side="right")) for k in range(1, 9)}
    pi["25"] = int(np.searchsorted(primes, 25, side="right"))
    o["pi"] = pi
    pe = {}
    for k in (6, 7, 8):
        x = 10 ** k
        z = mp.log(x)
        pe[str(x)] = {"w": [fl(abs(pi[str(x)] - x * prime_w(n, z))) for n in range(1, 5)],
                      "li": fl(mp.li(x) - pi[str(x)])}
    o["pi_error"] = pe
    p7 = primes[primes <= 10 ** 7]
    q = primes[primes <= math.isqrt(10 ** 7)]
    o["pi_gaussian_1e7"] = int(2 * np.count_nonzero(p7 % 4 == 1) + np.count_nonzero(q % 4 == 3) + 1)

    eg = mp.exp(mp.euler)
    mert = {"10": fl(eg * mp.mpf(8) / 35 * mp.log(10))}
    acc = mp.mpf(0)
    pos = 0
    for k in (5, 6, 7, 8):
        x = 10 ** k
        end = int(np.searchsorted(primes, x, side="right"))
        acc += mp.fsum(mp.log1p(-mp.mpf(1) / int(p)) for p in primes[pos:end])
        pos = end
        mert[str(x)] = {"log_sum": fl(acc), "r": fl(eg * mp.exp(acc) * mp.log(x))}
    o["mertens"] = mert
    print(f"mertens done in {time.time() - t0:.1f}s")

    # sum 1/(H_k - gamma) and li(n) minus it
    rh, gap = {}, {}
    H = mp.mpf(0)
    S = mp.mpf(0)
    checkpoints = {10 ** k for k in range(2, 7)} | {2, 8}
    for k in range(1, 10 ** 6 + 1):
        H += mp.mpf(1) / k
        S += 1 / (H - mp.euler)
        if k in checkpoints:
            rh[str(k)] = fl(S)
            gap[str(k)] = fl(mp.li(k) - S)
    o["rh_sum"] = rh
    o["li_rhsum_gap"] = gap
    o["harmonic_1e8"] = fl(mp.harmonic(10 ** 8))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(o, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT} in {time.time() - t0:.1f}s")


if __name__ == "__main__":
    main()
