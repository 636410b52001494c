"""``primecf`` command line.  Exit codes: 0 ok, 2 domain/config error, 3 precision loss."""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import experiments as ex
from .errors import PrecisionLoss, PrimeCFError

DEFAULT_GRIDS = {
    "error-table": "20:100:9:lin",
    "slope": "30:90:12:log",
    "pi-error": "1e4:1e8:9:log",
    "mertens": "1e5:1e8:7:log",
    "rh": "1e4:1e7:4:log",
    "ramanujan": "30:80:11:lin",
    "chain": "8:1e5:5:log",
}
COMMANDS = ("sequences", "cf") + tuple(DEFAULT_GRIDS)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primecf", description=__doc__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--grid", help="start:stop:points:log|lin")
    p.add_argument("--n", type=int, help="maximum order (or sequence length)")
    p.add_argument("--limit", type=int, help="sieve limit (default: grid maximum)")
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--cache", help="checkpoint cache file for prime counts")
    p.add_argument("--target", choices=("li", "pi"), default="li")
    p.add_argument("--names", default="D,A,I,Dp,G,J", help="comma-separated sequence names")
    p.add_argument("--kind", default="prime-J", help="prime-S, prime-J, expint-S or expint-J")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--param", type=int, default=0, help="shift n for expint fractions")
    p.add_argument("--L", dest="L", choices=("log", "harmonic", "digamma"), default="log")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--abort-on-precision-loss", action="store_true")
    return p


def _config(args) -> ex.ExperimentConfig:
    grid_text = args.grid or DEFAULT_GRIDS.get(args.command)
    if args.command == "error-table" and args.target == "pi" and not args.grid:
        grid_text = DEFAULT_GRIDS["pi-error"]
    grid = ex.Grid.parse(grid_text) if grid_text else None
    limit = args.limit or (int(grid.stop) if grid else 10 ** 8)
    return ex.ExperimentConfig(
        command=args.command, grid=grid, n=args.n, limit=limit,
        out=args.out, cache=args.cache, target=args.target,
        on_precision_loss="abort" if args.abort_on_precision_loss else "flag",
        names=tuple(s for s in args.names.split(",") if s), kind=args.kind,
        depth=args.depth, workers=args.workers)


def run(cfg: ex.ExperimentConfig, L: str = "log", param: int = 0) -> ex.CsvTable:
    c = cfg.command

    def n_or(default: int) -> int:
        return default if cfg.n is None else cfg.n

    if c == "sequences":
        return ex.cmd_sequences(cfg.names, n_or(10))
    if c == "cf":
        return ex.cmd_cf(cfg.kind, cfg.depth, cfg.n, param)
    if c == "slope":
        return ex.cmd_slope(n_or(1), cfg.grid).table()
    if c == "ramanujan":
        return ex.cmd_ramanujan(cfg.grid, cfg.on_precision_loss)
    if c == "chain":
        return ex.cmd_chain(cfg.grid.integers())
    if c == "error-table" and cfg.target == "li":
        return ex.cmd_error_table(n_or(3), cfg.grid, "li", policy=cfg.on_precision_loss)
    needed = cfg.grid.integers() if c == "rh" else cfg.grid.values()
    table = ex.load_table(cfg.limit, cfg.cache, needed, cfg.workers)
    if c in ("pi-error", "error-table"):
        return ex.cmd_pi_error(table, cfg.grid, n_or(4), L=L, policy=cfg.on_precision_loss)
    if c == "mertens":
        if isinstance(table, ex.CachedCounts):
            table = ex.load_table(cfg.limit, None, (), cfg.workers)
        return ex.cmd_mertens(table, cfg.grid)
    return ex.cmd_rh(table, cfg.grid.integers())


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        table = run(cfg, args.L, args.param)
    except PrecisionLoss as e:
        print(f"primecf: precision loss: {e}", file=sys.stderr)
        return 3
    except (PrimeCFError, ValueError, KeyError, IndexError) as e:
        print(f"primecf: {e}", file=sys.stderr)
        return 2
    text = table.to_csv()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
