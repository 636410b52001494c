"""Write every experiment table to ``results/`` (or ``--out DIR``).

    python scripts/reproduce.py [--out results] [--limit 100000000] [--cache results/pi.bin]
"""
from __future__ import annotations

import argparse
import time
from pathlib import Path

from primecf.experiments import (Grid, cmd_cf, cmd_chain, cmd_error_table, cmd_mertens,
                                 cmd_pi_error, cmd_ramanujan, cmd_rh, cmd_sequences, cmd_slope,
                                 load_table)
from primecf.primes import SieveConfig, sieve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="results")
    ap.add_argument("--limit", type=int, default=10 ** 8)
    ap.add_argument("--cache")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    def emit(name, table):
        table.write(out / f"{name}.csv")
        print(f"  {name}.csv  ({len(table.rows)} rows)")

    t0 = time.perf_counter()
    emit("sequences", cmd_sequences(("factorial", "D", "A", "I", "Dp", "G", "J", "H"), 12))
    emit("cf_prime_J", cmd_cf("prime-J", 12))
    emit("cf_prime_S", cmd_cf("prime-S", 12))
    for n in range(1, 5):
        emit(f"cf_expint_J_{n}", cmd_cf("expint-J", 8, n_param=n))
    emit("error_table", cmd_error_table(3, Grid(20.0, 100.0, 17, "lin")))
    u_grid = Grid(30.0, 90.0, 12, "log")
    fits = [cmd_slope(n, u_grid).table() for n in range(4)]
    fits[0].rows.extend(r for f in fits[1:] for r in f.rows)
    emit("slopes", fits[0])
    emit("ramanujan", cmd_ramanujan(Grid(30.0, 80.0, 26, "lin")))
    emit("chain", cmd_chain([8, 9, 10, 100, 1000, 10 ** 4, 10 ** 5]))

    x_grid = Grid(1e4, float(args.limit), 25)
    table = load_table(args.limit, args.cache, x_grid.values())
    emit("pi_error", cmd_pi_error(table, x_grid, 4))
    for L in ("harmonic", "digamma"):
        emit(f"pi_error_{L}", cmd_pi_error(table, x_grid, 4, L=L))
    if not hasattr(table, "primes"):
        table = sieve(SieveConfig(args.limit))
    emit("mertens", cmd_mertens(table, Grid(10.0, float(args.limit), 29)))
    ns = [10 ** k for k in range(2, len(str(args.limit)))]
    emit("rh", cmd_rh(table, ns))
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
