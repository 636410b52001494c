import json
from pathlib import Path

import pytest
from hypothesis import settings

from primecf.primes import SieveConfig, sieve

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def oracle():
    path = DATA / "oracle.json"
    if not path.exists():
        pytest.skip("tests/data/oracle.json missing; run scripts/oracle.py")
    return json.loads(path.read_text())


@pytest.fixture(scope="session")
def table_1e8():
    return sieve(SieveConfig(10 ** 8))


@pytest.fixture(scope="session")
def table_1e7():
    return sieve(SieveConfig(10 ** 7))


_ACCEPTANCE: list = []


@pytest.fixture
def record():
    """Log one acceptance sub-check; returns its truth value for asserting."""
    def _record(cid: int, label: str, ok: bool, detail: str = "") -> bool:
        ok = bool(ok)
        line = f"{'PASS' if ok else 'FAIL'}  C{cid:<2d} {label}" + (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append((cid, ok, line))
        print(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid in sorted({c for c, _, _ in _ACCEPTANCE}):
        rows = [r for r in _ACCEPTANCE if r[0] == cid]
        passed = sum(ok for _, ok, _ in rows)
        verdict = "PASS" if passed == len(rows) else "FAIL"
        tr.write_line(f"{verdict}  criterion {cid:>2}: {passed}/{len(rows)} checks")
        for _, _, line in rows:
            tr.write_line(f"      {line}")
