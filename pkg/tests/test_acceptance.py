"""Acceptance criteria, one test per criterion, each under its time limit.

Run with pytest (the pass/fail lines appear in the terminal summary) or
directly: ``python3 tests/test_acceptance.py``.
"""
import subprocess
import sys
import time
from pathlib import Path

import pytest

from affdemazure.theorem_suite import (
    suite_c2,
    suite_crystal,
    suite_fusion,
    suite_limit,
    suite_product,
    suite_sl2,
)

ROOT = Path(__file__).resolve().parent.parent
RESULTS = []


def _failed(report):
    return [i.description for i in report.instances if not i.passed]


def criterion_1():
    """sl2 ladder: dim D(1, m omega^vee) = 2^m for m = 1..10."""
    r = suite_sl2()
    dims = [i.computed for i in r.instances]
    ok = r.overall and dims == [2**m for m in range(1, 11)]
    return ok, f"dims={dims}"


def criterion_2():
    """C2: dim D(1, omega_1^vee) = 11 with the KR = 4 and 16 > 11 annotations."""
    r = suite_c2()
    dims = [i.computed for i in r.instances if "coweight" in i.description]
    notes = " ".join(r.notes)
    ok = r.overall and dims == [11] and "KR(omega_1) = 4" in notes and "16 > 11" in notes
    return ok, f"dim={dims} annotations={'present' if ok else 'missing'}"


def criterion_3():
    """Product formula on A2, A3, B2, C2, D4, G2 for sum m_i <= 3."""
    r = suite_product()
    types = sorted({i.description.split()[0] for i in r.instances})
    ok = r.overall and types == ["A2", "A3", "B2", "C2", "D4", "G2"]
    return ok, f"instances={len(r.instances)} failures={_failed(r)}"


def criterion_4():
    """Fusion character identity, levels 1 and 2, types A1, A2, C2."""
    r = suite_fusion()
    seen = {(i.description.split()[0], i.description.split()[1]) for i in r.instances}
    wanted = {(t, f"level={l}") for t in ("A1", "A2", "C2") for l in (1, 2)}
    ok = r.overall and seen == wanted
    return ok, f"instances={len(r.instances)} failures={_failed(r)}"


def criterion_5():
    """Crystal/character cross-oracle on rank <= 2, dim <= 500."""
    r = suite_crystal()
    prefix = [i for i in r.instances if "Lambda_0-prefix" in i.description]
    counted = [i for i in r.instances if i.description.endswith("|paths| vs dim")]
    ok = r.overall and prefix and all(i.expected <= 500 for i in counted)
    return bool(ok), f"cases={len(counted)} prefix_checks={len(prefix)} failures={_failed(r)}"


def criterion_6():
    """Limit stabilisation proxy on A1 and A2, m = 1, n = 1..4."""
    r = suite_limit()
    for name in ("A1", "A2"):
        mono = [i for i in r.instances if i.description.startswith(name) and "<= layers" in i.description]
        stable = [i for i in r.instances if i.description.startswith(name) and "stabilises" in i.description]
        if len(mono) != 3 or len(stable) != 2:
            return False, f"{name}: unexpected instance layout"
    return r.overall, f"instances={len(r.instances)} failures={_failed(r)}"


def criterion_7():
    """Property suites run standalone with zero failures."""
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(ROOT / "tests" / "test_properties.py")],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()
    return proc.returncode == 0, tail


def criterion_8():
    """``verify all`` twice gives byte-identical reports."""
    cmd = [sys.executable, "-m", "affdemazure", "verify", "all"]
    first = subprocess.run(cmd, capture_output=True, cwd=ROOT)
    second = subprocess.run(cmd, capture_output=True, cwd=ROOT)
    same = first.stdout == second.stdout and first.stdout
    ok = bool(same) and first.returncode == second.returncode == 0
    return ok, f"bytes={len(first.stdout)} identical={bool(same)} exit={first.returncode}"


CRITERIA = [
    (1, "sl2 ladder", 5, criterion_1),
    (2, "C2 counterexample", 1, criterion_2),
    (3, "product formula", 300, criterion_3),
    (4, "fusion character identity", 120, criterion_4),
    (5, "crystal/character cross-oracle", 120, criterion_5),
    (6, "limit stabilisation", 300, criterion_6),
    (7, "property suites", None, criterion_7),
    (8, "determinism of verify all", None, criterion_8),
]


def evaluate(number, name, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    status = "PASS" if ok and in_time else "FAIL"
    bound = f"limit {limit}s" if limit is not None else "no limit"
    line = f"criterion {number} {name}: {status} ({elapsed:.2f}s, {bound}) {detail}"
    RESULTS.append(line)
    print(line)
    return ok, in_time, line


@pytest.mark.parametrize("number,name,limit,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, name, limit, fn):
    ok, in_time, line = evaluate(number, name, limit, fn)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    outcomes = [evaluate(*c) for c in CRITERIA]
    sys.exit(0 if all(ok and t for ok, t, _ in outcomes) else 1)
