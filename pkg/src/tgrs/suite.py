"""Randomized differential suites.

Each suite draws instances from a seeded generator, compares a closed-form
statement with a direct computation and records every disagreement together
with the instance that produced it, so that it can be written out and
replayed.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .code import LinearCode, min_distance
from .criteria import (
    check_so,
    corollary_not_so,
    gram_is_zero,
    is_mds,
    minors_nonzero,
)
from .errors import RankDeficient
from .families import (
    DIFFERENTIAL_FIELDS,
    differential_sizes,
    lambda_eval,
    lambda_feasible,
    random_a1,
    random_a2,
    random_eval,
    sweep_table,
)
from .fla import MatrixGF
from .gf import GF, Field
from .twisted import EvalData, TGRSInstance, TwistMatrix, reduce_leading_coeff

MDS_FIELDS = ((2, 3), (2, 4), (2, 5), (2, 6), (3, 2), (3, 3), (5, 2), (7, 2), (11, 1), (13, 1), (17, 1))
ENUMERATION_CAP = 1 << 20


@dataclass
class Counterexample:
    suite: str
    reason: str
    instance: dict

    def to_dict(self) -> dict:
        return {"suite": self.suite, "reason": self.reason, "instance": self.instance}


@dataclass
class SuiteResult:
    name: str
    tested: int = 0
    failures: list[Counterexample] = field(default_factory=list)
    seconds: float = 0.0
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.tested > 0 and not self.failures

    def fail(self, reason: str, inst) -> None:
        obj = inst.to_json() if hasattr(inst, "to_json") else inst
        self.failures.append(Counterexample(self.name, reason, obj))

    def bump(self, key: str, by: int = 1) -> None:
        self.stats[key] = self.stats.get(key, 0) + by

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "tested": self.tested,
            "counterexamples": len(self.failures),
            "stats": dict(sorted(self.stats.items())),
        }


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _fields(spec) -> list[Field]:
    return [GF(p, h) for p, h in spec]


def _draw(maker, F: Field, rng, sizes=differential_sizes) -> TGRSInstance:
    while True:
        n, k = sizes(F, rng)
        try:
            inst = maker(F, n, k, rng)
            inst.generator()
        except RankDeficient:
            continue
        return inst


@_timed
def so_differential(rng, shape: str, count: int = 500) -> SuiteResult:
    """Closed-form self-orthogonality verdict against G G^T = 0.

    Instances with k > n/2 fall outside the case split and are skipped; the
    count refers to covered instances only.
    """
    res = SuiteResult(f"so-{shape}")
    maker = random_a1 if shape == "A1" else random_a2
    fields = _fields(DIFFERENTIAL_FIELDS)
    i = 0
    while res.tested < count:
        F = fields[i % len(fields)]
        i += 1
        n, k = differential_sizes(F, rng)
        if 2 * k > n:
            res.bump("skipped k > n/2")
            continue
        try:
            inst = maker(F, n, k, rng)
            actual = gram_is_zero(inst)
        except RankDeficient:
            res.bump("rank deficient")
            continue
        dec = check_so(inst)
        res.tested += 1
        res.bump("self-orthogonal" if actual else "not self-orthogonal")
        res.bump(f"field {F.name}")
        if dec.verdict != actual:
            res.fail(f"{dec.applicable_case}: criterion says {dec.verdict}, Gram test says {actual}", inst)
    return res


@_timed
def parity_checks(rng, shape: str, count: int = 200) -> SuiteResult:
    """G H^T = 0 and rank H = n - k for the explicit parity-check matrices."""
    res = SuiteResult(f"parity-{shape}")
    maker = random_a1 if shape == "A1" else random_a2
    fields = _fields(DIFFERENTIAL_FIELDS)

    def sizes(F, rng):
        n = int(rng.integers(5, min(12, F.q) + 1))
        return n, int(rng.integers(2, n - 1))

    for i in range(count):
        F = fields[i % len(fields)]
        inst = _draw(maker, F, rng, sizes)
        G, H = inst.generator(), inst.parity_check()
        res.tested += 1
        if not (G @ H.T).is_zero():
            res.fail("G H^T != 0", inst)
        elif H.rank() != inst.n - inst.k:
            res.fail(f"rank H = {H.rank()} != n - k = {inst.n - inst.k}", inst)
    return res


def _random_small(F: Field, n: int, k: int, rng) -> TGRSInstance:
    ev = random_eval(F, n, rng)
    if rng.random() < 0.5:
        mask = rng.random(4) < 0.5
        ent = tuple(F.random(rng, nonzero=True) if m else F.zero for m in mask)
        return TGRSInstance(ev, k, TwistMatrix("A1", ent))
    ent = [F.random(rng) if rng.random() < 0.5 else F.zero for _ in range(n - k - 1)]
    return TGRSInstance(ev, k, TwistMatrix("A2", (*ent, F.random(rng, nonzero=True))))


@_timed
def mds_equivalence(rng, count: int = 200) -> SuiteResult:
    """is_mds, d = n - k + 1 and nonvanishing k x k minors all agree."""
    res = SuiteResult("mds")
    fields = _fields(MDS_FIELDS)

    def sizes(F, rng):
        n = int(rng.integers(5, min(10, F.q) + 1))
        return n, int(rng.integers(2, n - 1))

    for i in range(count):
        F = fields[i % len(fields)]
        inst = _draw(_random_small, F, rng, sizes)
        a = is_mds(inst)
        C = inst.code()
        b = min_distance(C) == inst.n - inst.k + 1
        c = minors_nonzero(inst)
        res.tested += 1
        res.bump("MDS" if b else "not MDS")
        if not a == b == c:
            res.fail(f"is_mds={a}, singleton={b}, minors={c}", inst)
    return res


def complete_homogeneous(alpha, t: int):
    """h_t(alpha): sum of all degree-t monomials, by brute force."""
    F = alpha[0].field
    acc = F.zero
    for combo in itertools.combinations_with_replacement(alpha, t):
        term = F.one
        for a in combo:
            term = term * a
        acc = acc + term
    return acc


@_timed
def lambda_identities(rng, count: int = 100) -> SuiteResult:
    """Reduced leading coefficients equal the Lambda recursion, and h_t for small n."""
    res = SuiteResult("lambda")
    fields = _fields(DIFFERENTIAL_FIELDS + ((11, 1), (2, 6)))
    for i in range(count):
        F = fields[i % len(fields)]
        n = int(rng.integers(2, min(12, F.q) + 1))
        ev = random_eval(F, n, rng)
        res.tested += 1
        for t in range(n + 1):
            got = reduce_leading_coeff(ev, t)
            if got != ev.lam[t]:
                res.fail(f"t={t}: reduction {got} vs recursion {ev.lam[t]}", _ev_json(ev))
                break
            if n <= 6 and t <= 4:
                res.bump("brute-force comparisons")
                h = complete_homogeneous(ev.alpha, t)
                if h != got:
                    res.fail(f"t={t}: h_t {h} vs reduction {got}", _ev_json(ev))
                    break
    return res


def _ev_json(ev: EvalData) -> dict:
    return {
        "field": ev.field.to_dict(),
        "alpha": [a.to_json() for a in ev.alpha],
        "v": [x.to_json() for x in ev.v],
    }


@_timed
def distance_oracles(rng, count: int = 150) -> SuiteResult:
    """Column-dependency distance against exhaustive enumeration (q^k <= 2^20)."""
    res = SuiteResult("distance")
    fields = _fields(DIFFERENTIAL_FIELDS + ((11, 1), (2, 5), (13, 1)))
    i = 0
    while res.tested < count:
        F = fields[i % len(fields)]
        i += 1
        n = int(rng.integers(4, min(12, F.q + 1) + 1))
        kmax = min(n - 1, int(math.log(ENUMERATION_CAP) / math.log(F.q)))
        k = int(rng.integers(1, kmax + 1))
        if rng.random() < 0.5 and n <= F.q and 2 <= k <= n - 2:
            try:
                inst = _random_small(F, n, k, rng)
                C = inst.code()
            except RankDeficient:
                continue
            obj = inst
        else:
            M = MatrixGF(F, [[F.random(rng) for _ in range(n)] for _ in range(k)])
            if M.rank() != k:
                continue
            C = LinearCode(M)
            obj = {"field": F.to_dict(), "generator": M.to_json()}
        a = min_distance(C, "columns")
        b = min_distance(C, "enumerate", bound=ENUMERATION_CAP)
        res.tested += 1
        if a != b:
            res.fail(f"columns {a} vs enumerate {b}", obj)
    return res


def _corollary_instances(rng, per_case: int):
    for F in _fields(((5, 2), (7, 2), (17, 1), (2, 4))):
        for k in (2, 3):
            for gap, masks in ((2, ("1001", "0110")), (3, ("0001",))):
                n = 2 * k + gap
                for mask in masks:
                    for _ in range(per_case):
                        use_lam = lambda_feasible(F, n) and rng.random() < 0.8
                        ev = lambda_eval(F, n, rng) if use_lam else random_eval(F, n, rng)
                        ent = tuple(F.random(rng, nonzero=True) if m == "1" else F.zero for m in mask)
                        yield TGRSInstance(ev, k, TwistMatrix("A1", ent))


@_timed
def table_sweep(rng, per_cell: int = 6, corollary_per_case: int = 8) -> SuiteResult:
    """Table of Gamma patterns against the Gram test, plus the negative corollaries."""
    res = SuiteResult("table")
    rows = sweep_table(rng, per_cell=per_cell)
    grid = []
    for r in rows:
        res.tested += r.tested
        grid.append(
            {"row": r.row.label, "verdict": r.row.verdict, "tested": r.tested, "self_orthogonal": r.positives}
        )
        if r.mismatches:
            res.fail(f"{r.row.label}: {r.mismatches} mismatches", r.example)
        if r.row.verdict and not r.positives:
            res.fail(f"{r.row.label}: no self-orthogonal instance was generated", {})
        if not r.row.verdict and r.positives:
            res.fail(f"{r.row.label}: self-orthogonal instance in an excluded cell", r.example or {})
    for inst in _corollary_instances(rng, corollary_per_case):
        res.tested += 1
        res.bump("corollary instances")
        if not corollary_not_so(inst):
            res.fail("corollary did not fire", inst)
        elif gram_is_zero(inst):
            res.fail("corollary instance is self-orthogonal", inst)
    res.stats["grid"] = grid
    return res


SUITES = ("so-A1", "so-A2", "parity-A1", "parity-A2", "mds", "lambda", "distance", "table")


def run_suite(name: str, rng, scale: float = 1.0) -> SuiteResult:
    def n(x):
        return max(1, int(round(x * scale)))

    if name.startswith("so-"):
        return so_differential(rng, name[3:], n(500))
    if name.startswith("parity-"):
        return parity_checks(rng, name[7:], n(200))
    if name == "mds":
        return mds_equivalence(rng, n(200))
    if name == "lambda":
        return lambda_identities(rng, n(100))
    if name == "distance":
        return distance_oracles(rng, n(150))
    if name == "table":
        return table_sweep(rng, per_cell=max(2, n(6)), corollary_per_case=n(8))
    raise KeyError(f"unknown suite {name!r}")


def run_all(seed: int, only=None, scale: float = 1.0) -> list[SuiteResult]:
    """Every suite in order; each one gets its own child generator of ``seed``."""
    children = np.random.SeedSequence(seed).spawn(len(SUITES))
    out = []
    for name, child in zip(SUITES, children):
        if only and name not in only:
            continue
        out.append(run_suite(name, np.random.default_rng(child), scale))
    return out
