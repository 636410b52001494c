import subprocess
import sys

import pytest

from primecf.cli import main
from primecf.primes import read_cache


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_sequences(capsys):
    code, out, _ = run(capsys, "sequences", "--names", "D", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["n,D", "0,1", "1,0", "2,1", "3,2", "4,9", "5,44", "6,265"]


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "--depth", "2")
    assert code == 0
    assert out.splitlines()[2] == "2,1,-3,-3;1,2;-4;1"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "e.csv"
    code, out, _ = run(capsys, "error-table", "--n", "1", "--grid", "20:100:3:lin", "--out", str(path))
    assert code == 0 and out == ""
    lines = path.read_text().splitlines()
    assert lines[0] == "n,u,g,w_n,err,c_n,precision_loss" and len(lines) == 7


def test_unknown_sequence_exit_2(capsys):
    code, _, err = run(capsys, "sequences", "--names", "Q")
    assert code == 2 and "unknown sequence" in err


def test_bad_grid_exit_2(capsys):
    assert run(capsys, "error-table", "--grid", "5:50:3")[0] == 2
    assert run(capsys, "slope", "--grid", "90:30:3")[0] == 2
    assert run(capsys, "mertens", "--limit", str(2 ** 35))[0] == 2


def test_precision_loss_exit_3(capsys):
    assert run(capsys, "slope", "--n", "3", "--grid", "200:300:3")[0] == 3


def test_abort_policy_passes_resolvable_runs(capsys):
    # every point of the admissible error-table and ramanujan grids is resolvable
    assert run(capsys, "error-table", "--grid", "20:100:5:lin", "--abort-on-precision-loss")[0] == 0
    assert run(capsys, "ramanujan", "--abort-on-precision-loss")[0] == 0


def test_cache_written_and_reused(tmp_path, capsys):
    cache = tmp_path / "pi.bin"
    args = ("pi-error", "--grid", "1e4:1e6:3", "--n", "2", "--cache", str(cache))
    code, first, _ = run(capsys, *args)
    assert code == 0 and cache.read_bytes()[:4] == b"PCF1"
    counts = read_cache(cache)
    assert counts[10 ** 6] == 78498 and counts[10 ** 4] == 1229
    code, second, _ = run(capsys, *args)
    assert code == 0 and second == first


def test_error_table_pi_target(capsys):
    code, out, _ = run(capsys, "error-table", "--target", "pi", "--grid", "1e4:1e5:2", "--n", "2")
    assert code == 0 and out.startswith("x,log_x,L,pi,li,A,err_li,approx_1")


@pytest.mark.parametrize("cmd", ["rh", "mertens", "chain", "ramanujan", "slope"])
def test_commands_run(capsys, cmd):
    grids = {"rh": "1e4:1e5:2", "mertens": "1e4:1e5:2", "chain": "8:1000:3"}
    args = [cmd] + (["--grid", grids[cmd]] if cmd in grids else [])
    code, out, _ = run(capsys, *args)
    assert code == 0 and out.count("\n") >= 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "primecf", "sequences", "--names", "H", "--n", "2"],
                       capture_output=True, text=True, check=True)
    assert r.stdout == "n,H\n0,0\n1,1\n2,3/2\n"
