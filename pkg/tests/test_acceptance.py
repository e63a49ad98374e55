"""Acceptance criteria 1-7, one test each.

Every test records a one-line verdict; the lines are printed together at the
end of the pytest run (see ``pytest_terminal_summary`` in conftest.py), and
also when this file is run as a script.
"""

import time

import numpy as np
import pytest

from tgrs.code import dual, min_distance
from tgrs.gf import GF
from tgrs.suite import (
    distance_oracles,
    lambda_identities,
    mds_equivalence,
    parity_checks,
    so_differential,
    table_sweep,
)
from tgrs.worked import load_example, run_examples

VERDICTS: dict[int, str] = {}


def record(num: int, ok: bool, detail: str) -> None:
    VERDICTS[num] = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    assert ok, VERDICTS[num]


def test_criterion_1_examples():
    t0 = time.perf_counter()
    results = run_examples()
    total = time.perf_counter() - t0
    failed = [f"{r.case.name}: {r.diffs}" for r in results if not r.passed]
    slow = [r.case.name for r in results if r.seconds >= 10]
    ok = not failed and not slow and total < 60 and len(results) == 11
    detail = f"{len(results) - len(failed)}/{len(results)} example cases exact, {total:.1f} s"
    if failed:
        detail += f"; failures {failed}"
    if slow:
        detail += f"; over 10 s: {slow}"
    record(1, ok, detail)


def test_criterion_2_differential():
    t0 = time.perf_counter()
    res = [so_differential(np.random.default_rng(seed), shape, 500) for seed, shape in ((21, "A1"), (22, "A2"))]
    total = time.perf_counter() - t0
    want_fields = {"GF(2^3)", "GF(2^4)", "GF(3^2)", "GF(5^2)", "GF(7^2)"}
    covered = all(want_fields <= {k[6:] for k in r.stats if k.startswith("field ")} for r in res)
    both = all(r.stats.get("self-orthogonal", 0) > 0 and r.stats.get("not self-orthogonal", 0) > 0 for r in res)
    bad = sum(len(r.failures) for r in res)
    ok = all(r.tested >= 500 for r in res) and bad == 0 and covered and both and total < 120
    record(
        2,
        ok,
        f"A1 {res[0].tested} ({res[0].stats.get('self-orthogonal', 0)} SO), "
        f"A2 {res[1].tested} ({res[1].stats.get('self-orthogonal', 0)} SO), "
        f"{bad} counterexamples, {total:.1f} s",
    )


def test_criterion_3_parity_checks():
    res = [parity_checks(np.random.default_rng(seed), shape, 200) for seed, shape in ((31, "A1"), (32, "A2"))]
    bad = sum(len(r.failures) for r in res)
    ok = all(r.tested >= 200 for r in res) and bad == 0
    record(3, ok, f"(G1,H1) {res[0].tested}, (G2,H2) {res[1].tested} instances, {bad} failures")


def test_criterion_4_mds():
    res = mds_equivalence(np.random.default_rng(41), 200)
    ok = res.tested >= 200 and not res.failures and res.stats.get("MDS", 0) > 0 and res.stats.get("not MDS", 0) > 0
    record(4, ok, f"{res.tested} instances ({res.stats.get('MDS', 0)} MDS), {len(res.failures)} failures")


def test_criterion_5_lambda():
    res = lambda_identities(np.random.default_rng(51), 100)
    brute = res.stats.get("brute-force comparisons", 0)
    ok = res.tested >= 100 and not res.failures and brute > 0
    record(5, ok, f"{res.tested} point sets, {brute} brute-force h_t comparisons, {len(res.failures)} failures")


def test_criterion_6_table():
    res = table_sweep(np.random.default_rng(61))
    grid = res.stats["grid"]
    yes = sum(1 for g in grid if g["verdict"])
    ok = res.tested > 0 and not res.failures
    record(
        6,
        ok,
        f"{len(grid)} table cells ({yes} self-orthogonal, {len(grid) - yes} excluded), "
        f"{res.stats.get('corollary instances', 0)} corollary instances, {len(res.failures)} mismatches",
    )


def test_criterion_7_distance():
    res = distance_oracles(np.random.default_rng(71), 300)
    extra = 0
    disagree = [f.reason for f in res.failures]
    for rid in ("block1", "block3", "block4", "block6", "line1", "line2", "line4", "block2", "block5", "line3"):
        for case in load_example(rid):
            C = case.instance.code()
            for label, D in ((case.name, C), (f"{case.name} dual", dual(C))):
                if D.field.q ** D.k <= 1 << 20:
                    extra += 1
                    a, b = min_distance(D, "columns"), min_distance(D, "enumerate", bound=1 << 20)
                    if a != b:
                        disagree.append(f"{label}: {a} vs {b}")
    ok = not disagree and res.tested >= 300
    record(7, ok, f"{res.tested} random codes + {extra} example codes and duals with q^k <= 2^20, {len(disagree)} disagreements")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    for num in sorted(VERDICTS):
        print(VERDICTS[num])
    raise SystemExit(0 if all("PASS" in v for v in VERDICTS.values()) and len(VERDICTS) == 7 else 1)
