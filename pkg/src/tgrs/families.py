"""Random instance families for differential testing.

The self-orthogonality criteria only bite when the column multipliers satisfy
v_i^2 = lambda u_i for one constant lambda.  In odd characteristic that needs
every u_i to have the same quadratic character, which a uniformly random
point set meets with probability about 2^(1-n); the samplers below filter
whole batches at once with numpy, reading characters off the parity of
discrete logarithms (the field generator is a non-square).

Table rows are the Gamma patterns of the A1 twist with their verdict per gap
n - 2k: ``True`` (self-orthogonal exactly when the condition holds), ``False``
(never self-orthogonal), each under the lambda-condition.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .criteria import check_so, gram_is_zero, lambda_condition
from .errors import CaseNotCovered, DivisionByZero, NotASquare, SearchBoundExceeded
from .gf import GF, Field, FieldElement
from .twisted import EvalData, TGRSInstance, TwistMatrix, eval_data

DIFFERENTIAL_FIELDS = ((2, 3), (2, 4), (3, 2), (5, 2), (7, 2))


def _tables(F: Field) -> tuple[np.ndarray, np.ndarray]:
    """Subtraction table and log table (log 0 = -1) as numpy arrays."""
    cached = getattr(F, "_family_tables", None)
    if cached is None:
        a = np.arange(F.q, dtype=np.int64)
        neg = np.array([F.neg(int(x)) for x in a], dtype=np.int64)
        sub = F.vadd(a[:, None], neg[None, :])
        log = np.array([-1] + [F.log_of(int(x)) for x in a[1:]], dtype=np.int64)
        cached = (sub, log)
        F._family_tables = cached
    return cached


def _sigma_batch(F: Field, S: np.ndarray) -> np.ndarray:
    """Signed coefficients sigma_0..sigma_n of prod (x - a) for each row of S."""
    sub, _ = _tables(F)
    T, n = S.shape
    sig = np.zeros((T, n + 1), dtype=np.int64)
    sig[:, 0] = 1
    for j in range(n):
        a = S[:, j]
        # sigma_i <- sigma_i - a sigma_{i-1}, highest index first
        prod = F.vmul(a[:, None], sig[:, :j + 1])
        sig[:, 1:j + 2] = sub[sig[:, 1:j + 2], prod]
    return sig


def _same_character(F: Field, S: np.ndarray) -> np.ndarray:
    """Rows of S whose u_i all share one quadratic character (always true for p = 2)."""
    if F.p == 2:
        return np.ones(len(S), dtype=bool)
    sub, log = _tables(F)
    D = sub[S[:, :, None], S[:, None, :]]
    L = log[D]
    n = S.shape[1]
    L[:, np.arange(n), np.arange(n)] = 0
    par = L.sum(axis=2) % 2
    return (par == par[:, :1]).all(axis=1)


@functools.lru_cache(maxsize=None)
def lambda_feasible(F: Field, n: int) -> bool:
    """Whether some n-subset of F admits a common lambda.

    Exact for small fields (every subset is tried); larger fields are taken
    to be feasible.  Prime fields are restrictive: GF(11) has no such set for
    6 <= n <= 10 and GF(13) none for 7 <= n <= 12.
    """
    if F.p == 2 or n > F.q:
        return F.p == 2 and n <= F.q
    if math.comb(F.q, n) > 400_000:
        return True
    S = np.array(list(itertools.combinations(range(F.q), n)), dtype=np.int64)
    return bool(_same_character(F, S).any())


def lambda_points(
    F: Field,
    n: int,
    rng,
    constraint: Callable[[np.ndarray], np.ndarray] | None = None,
    batch: int = 4096,
    max_batches: int = 100,
) -> list[FieldElement]:
    """n distinct points whose u_i admit a common lambda.

    ``constraint`` receives the batch of sigma rows (encodings) and returns a
    boolean mask; use it to force e.g. sigma_1 = 0.
    """
    if not lambda_feasible(F, n):
        raise SearchBoundExceeded(f"no {n}-subset of {F.name} admits a common lambda")
    for _ in range(max_batches):
        S = np.argsort(rng.random((batch, F.q)), axis=1)[:, :n]
        ok = _same_character(F, S)
        if constraint is not None and ok.any():
            idx = np.flatnonzero(ok)
            ok[idx] = constraint(_sigma_batch(F, S[idx]))
        hits = np.flatnonzero(ok)
        if len(hits):
            return [F.from_int(int(x)) for x in S[hits[0]]]
    raise SearchBoundExceeded(f"no admissible point set of size {n} in {F.name}")


def lambda_multipliers(ev: EvalData, rng) -> list[FieldElement]:
    """Random v with v_i^2 = lambda u_i, random lambda and random signs."""
    F = ev.field
    while True:
        lam = F.random(rng, nonzero=True)
        if F.p == 2 or (lam * ev.u[0]).is_square():
            break
    v = []
    for u in ev.u:
        r = (lam * u).sqrt()
        v.append(-r if F.p != 2 and rng.random() < 0.5 else r)
    return v


def lambda_eval(F: Field, n: int, rng, constraint=None, max_batches: int = 100) -> EvalData:
    alpha = lambda_points(F, n, rng, constraint, max_batches=max_batches)
    ev = eval_data(alpha, [F.one] * n, F)
    return eval_data(alpha, lambda_multipliers(ev, rng), F)


def random_eval(F: Field, n: int, rng) -> EvalData:
    alpha = [F.from_int(int(x)) for x in rng.choice(F.q, n, replace=False)]
    v = [F.random(rng, nonzero=True) for _ in range(n)]
    return eval_data(alpha, v, F)


################################################################################
# random A1 / A2 instances


def _scan(inst: TGRSInstance, slot: int, rng, oracle: Callable[[TGRSInstance], bool]) -> TGRSInstance:
    """Replace one twist entry by a random value that makes ``oracle`` true, if any."""
    F = inst.field
    hits = []
    for x in range(F.q):
        ent = list(inst.twist.entries)
        ent[slot] = F.from_int(x)
        if inst.shape == "A2" and not ent[-1]:
            continue
        cand = inst.with_twist(TwistMatrix(inst.shape, tuple(ent)))
        if oracle(cand):
            hits.append(cand)
    return hits[int(rng.integers(len(hits)))] if hits else inst


def _criterion(inst: TGRSInstance) -> bool:
    return check_so(inst).verdict


def random_a1(F: Field, n: int, k: int, rng, lam_prob: float = 0.8, scan_prob: float = 0.5) -> TGRSInstance:
    """A random A1 instance, tilted towards self-orthogonal ones.

    Most draws use lambda-family multipliers; the twist gets a random zero
    pattern, and with probability ``scan_prob`` one entry is re-chosen so
    that either the closed-form criterion or the Gram test holds.
    """
    use_lam = rng.random() < lam_prob and lambda_feasible(F, n)
    ev = lambda_eval(F, n, rng) if use_lam else random_eval(F, n, rng)
    mask = rng.random(4) < 0.6
    ent = [F.random(rng, nonzero=True) if m else F.zero for m in mask]
    gap = n - 2 * k
    if gap == 3 and rng.random() < 0.5:
        ent[1] = ent[3] = F.zero
    if gap == 2 and rng.random() < 0.5 and F.p != 2:
        s1 = ev.sigma[1]
        ent[0], ent[2] = ent[1] * s1 / 2, ent[3] * s1 / 2
    inst = TGRSInstance(ev, k, TwistMatrix("A1", tuple(ent)))
    if 2 * k <= n and rng.random() < scan_prob:
        oracle = _criterion if rng.random() < 0.5 else gram_is_zero
        inst = _scan(inst, int(rng.integers(4)), rng, oracle)
    return inst


def random_a2(F: Field, n: int, k: int, rng, lam_prob: float = 0.8, fit_prob: float = 0.6) -> TGRSInstance:
    """A random A2 instance; with probability ``fit_prob`` the forced entries eta_{n-k-i} = eta_{n-k} sigma_i are set."""
    use_lam = rng.random() < lam_prob and lambda_feasible(F, n)
    ev = lambda_eval(F, n, rng) if use_lam else random_eval(F, n, rng)
    r = n - k
    eta = [F.random(rng) for _ in range(r - 1)] + [F.random(rng, nonzero=True)]
    if 2 * k <= n and rng.random() < fit_prob:
        lead = eta[-1]
        for i in range(1, k):
            eta[r - i - 1] = lead * ev.sigma[i]
        inst = TGRSInstance(ev, k, TwistMatrix("A2", tuple(eta)))
        if n == 2 * k:
            # eta_k sigma_{n-1} = 2 pins the leading entry
            s = ev.sigma[n - 1]
            if s and F.p != 2:
                lead = F(2) / s
                eta = [lead * ev.sigma[r - i] for i in range(1, r)] + [lead]
                inst = TGRSInstance(ev, k, TwistMatrix("A2", tuple(eta)))
        else:
            oracle = _criterion if rng.random() < 0.5 else gram_is_zero
            inst = _scan(inst, 0, rng, oracle)
        return inst
    return TGRSInstance(ev, k, TwistMatrix("A2", tuple(eta)))


def differential_sizes(F: Field, rng) -> tuple[int, int]:
    """n in 6..12 (capped by q) and 2 <= k <= n/2, with k = n/2 + 1 now and then."""
    n = int(rng.integers(6, min(12, F.q) + 1))
    if rng.random() < 0.05:
        return n, n // 2 + 1
    return n, int(rng.integers(2, n // 2 + 1))


################################################################################
# Table of Gamma patterns


def _e(inst: TGRSInstance) -> tuple[FieldElement, ...]:
    return inst.twist.entries


def _s(inst: TGRSInstance, i: int) -> FieldElement:
    sig = inst.eval.sigma
    return sig[i] if i < len(sig) else inst.field.zero


@dataclass(frozen=True)
class TableRow:
    """One (pattern, gap) cell: verdict, condition text and predicate, and a positive-instance solver."""

    pattern: str  # nonzero mask over (eta11, eta12, eta21, eta22)
    gap: int  # n - 2k; 4 means ">= 4", 2 with ``at_least`` means ">= 2"
    at_least: bool
    verdict: bool
    condition: str
    predicate: Callable[[TGRSInstance], bool] | None = None
    # constraint on sigma rows for the point sampler, and a solver for the twist
    points: Callable[[Field, np.ndarray], np.ndarray] | None = None
    solve: Callable[[EvalData, object], tuple | None] | None = None

    @property
    def label(self) -> str:
        rows = [self.pattern[:2], self.pattern[2:]]
        names = iter(("eta1", "eta2") if self.pattern.count("1") == 2 else ("eta",))
        cells = [[next(names) if c == "1" else "0" for c in row] for row in rows]
        g = "[[" + ", ".join(cells[0]) + "], [" + ", ".join(cells[1]) + "]]"
        n = f"n >= 2k+{self.gap}" if self.at_least else ("n = 2k" if self.gap == 0 else f"n = 2k+{self.gap}")
        return f"{g} {n}"

    def gaps(self) -> list[int]:
        return [self.gap, self.gap + 1] if self.at_least else [self.gap]


def _place(pattern: str, vals) -> tuple:
    it = iter(vals)
    return tuple(next(it) if c == "1" else None for c in pattern)


def _sig(F: Field, S: np.ndarray, i: int) -> np.ndarray:
    return S[:, i]


def _zero(i: int):
    return lambda F, S: S[:, i] == 0


def _nonzero(*idx: int):
    return lambda F, S: np.all(S[:, list(idx)] != 0, axis=1)


def _and(*fs):
    return lambda F, S: np.logical_and.reduce([f(F, S) for f in fs])


def _sigma1_sq_eq_2sigma2(F: Field, S: np.ndarray) -> np.ndarray:
    s1, s2 = S[:, 1], S[:, 2]
    sq = F.vmul(s1, s1)
    two_s2 = F.vmul(np.full_like(s2, F.scalar_int(2)), s2)
    sub, _ = _tables(F)
    return (sub[sq, two_s2] == 0) & (s1 != 0) & (S[:, 3] != 0)


def _solve_row6_gap1(ev: EvalData, rng):
    F = ev.field
    s1, s2 = ev.sigma[1], ev.sigma[2]
    for _ in range(4 * F.q):
        e2 = F.random(rng, nonzero=True)
        try:
            r = (e2 * e2 * s2 - 2 * e2).sqrt()
        except NotASquare:
            continue
        e1 = e2 * s1 + (r if rng.random() < 0.5 else -r)
        if e1:
            return (e1, e2)
    return None


def _rand(ev, rng):
    return ev.field.random(rng, nonzero=True)


def _rows() -> list[TableRow]:
    two = lambda inst: inst.field(2)  # noqa: E731
    R = []

    def add(pattern, gap, at_least, verdict, condition="", predicate=None, points=None, solve=None):
        R.append(TableRow(pattern, gap, at_least, verdict, condition, predicate, points, solve))

    # [[eta, 0], [0, 0]]
    add("1000", 2, True, True)
    add("1000", 1, False, False)
    add("1000", 0, False, False)
    # [[0, eta], [0, 0]]
    add("0100", 4, True, True)
    add("0100", 3, False, False)
    add("0100", 2, False, True, "sigma1 = 0", lambda i: not _s(i, 1), _zero(1))
    add("0100", 1, False, False)
    add(
        "0100", 0, False, True, "sigma1 = 0, eta sigma3 = 2",
        lambda i: not _s(i, 1) and _e(i)[1] * _s(i, 3) == two(i),
        _and(_zero(1), _nonzero(3)),
        lambda ev, rng: (ev.field(2) / ev.sigma[3],),
    )
    # [[0, 0], [eta, 0]]
    add("0010", 2, True, True)
    add("0010", 1, False, False)
    add(
        "0010", 0, False, True, "eta sigma1 = 2",
        lambda i: _e(i)[2] * _s(i, 1) == two(i),
        _nonzero(1),
        lambda ev, rng: (ev.field(2) / ev.sigma[1],),
    )
    # [[0, 0], [0, eta]]
    add("0001", 4, True, True)
    add("0001", 3, False, False)
    add("0001", 2, False, True, "sigma1 = 0", lambda i: not _s(i, 1), _zero(1))
    add(
        "0001", 1, False, True, "eta sigma2 - eta sigma1^2 = 2",
        lambda i: _e(i)[3] * (_s(i, 2) - _s(i, 1) ** 2) == two(i),
        None,
        lambda ev, rng: (ev.field(2) / (ev.sigma[2] - ev.sigma[1] ** 2),),
    )
    add("0001", 0, False, False)
    # [[eta1, eta2], [0, 0]]
    add("1100", 4, True, True)
    add("1100", 3, False, False)
    add(
        "1100", 2, False, True, "eta2 sigma1 = 2 eta1",
        lambda i: _e(i)[1] * _s(i, 1) == 2 * _e(i)[0],
        _nonzero(1),
        lambda ev, rng: (lambda e2: (e2 * ev.sigma[1] / 2, e2))(_rand(ev, rng)),
    )
    add("1100", 1, False, False)
    add(
        "1100", 0, False, True, "eta2 sigma1 = eta1, eta2 sigma3 = 2",
        lambda i: _e(i)[1] * _s(i, 1) == _e(i)[0] and _e(i)[1] * _s(i, 3) == two(i),
        _nonzero(1, 3),
        lambda ev, rng: (lambda e2: (e2 * ev.sigma[1], e2))(ev.field(2) / ev.sigma[3]),
    )
    # [[0, 0], [eta1, eta2]]
    add("0011", 4, True, True)
    add("0011", 3, False, False)
    add(
        "0011", 2, False, True, "eta2 sigma1 = 2 eta1",
        lambda i: _e(i)[3] * _s(i, 1) == 2 * _e(i)[2],
        _nonzero(1),
        lambda ev, rng: (lambda e2: (e2 * ev.sigma[1] / 2, e2))(_rand(ev, rng)),
    )
    add(
        "0011", 1, False, True, "2 eta1 eta2 sigma1 + eta2^2 sigma2 - eta2^2 sigma1^2 - 2 eta2 - eta1^2 = 0",
        lambda i: not (
            2 * _e(i)[2] * _e(i)[3] * _s(i, 1)
            + _e(i)[3] ** 2 * _s(i, 2)
            - _e(i)[3] ** 2 * _s(i, 1) ** 2
            - 2 * _e(i)[3]
            - _e(i)[2] ** 2
        ),
        None,
        _solve_row6_gap1,
    )
    add("0011", 0, False, False)
    # [[eta1, 0], [eta2, 0]]
    add("1010", 2, True, True)
    add("1010", 1, False, False)
    add("1010", 0, False, False)
    # [[0, eta1], [0, eta2]]
    add("0101", 4, True, True)
    add("0101", 3, False, False)
    add("0101", 2, False, True, "sigma1 = 0", lambda i: not _s(i, 1), _zero(1))
    add("0101", 1, False, False)
    add(
        "0101", 0, False, True, "eta2 = -eta1 sigma1, eta1 sigma1^3 - 2 eta1 sigma1 sigma2 + eta1 sigma3 = 2",
        lambda i: _e(i)[3] == -_e(i)[1] * _s(i, 1)
        and _e(i)[1] * (_s(i, 1) ** 3 - 2 * _s(i, 1) * _s(i, 2) + _s(i, 3)) == two(i),
        _nonzero(1),
        lambda ev, rng: (
            lambda e1: (e1, -e1 * ev.sigma[1])
        )(ev.field(2) / (ev.sigma[1] ** 3 - 2 * ev.sigma[1] * ev.sigma[2] + ev.sigma[3])),
    )
    # [[eta1, 0], [0, eta2]]
    add("1001", 4, True, True)
    add("1001", 3, False, False)
    add("1001", 2, False, False)
    add("1001", 1, False, False)
    add(
        "1001", 0, False, True, "sigma1 = sigma3 = 0, eta1 eta2 sigma2 = eta1 + eta2",
        lambda i: not _s(i, 1) and not _s(i, 3) and _e(i)[0] * _e(i)[3] * _s(i, 2) == _e(i)[0] + _e(i)[3],
        _and(_zero(1), _zero(3), _nonzero(2)),
        lambda ev, rng: (lambda e1: (e1, e1 / (e1 * ev.sigma[2] - 1)))(_rand(ev, rng)),
    )
    # [[0, eta2], [eta1, 0]]
    add("0110", 4, True, True)
    add("0110", 3, False, False)
    add("0110", 2, False, False)
    add("0110", 1, False, False)
    add(
        "0110", 0, False, True, "eta1 sigma1 = 2, eta2 sigma3 = 2, eta1 sigma2 = sigma1",
        lambda i: _e(i)[2] * _s(i, 1) == two(i) and _e(i)[1] * _s(i, 3) == two(i) and _e(i)[2] * _s(i, 2) == _s(i, 1),
        _sigma1_sq_eq_2sigma2,
        # the pattern lists eta12 before eta21: the tuple is (eta12, eta21)
        lambda ev, rng: (ev.field(2) / ev.sigma[3], ev.field(2) / ev.sigma[1]),
    )
    return R


TABLE_ROWS = _rows()


def table_row(pattern: str, gap: int) -> TableRow:
    for row in TABLE_ROWS:
        if row.pattern == pattern and (gap in row.gaps() if not row.at_least else gap >= row.gap):
            return row
    raise KeyError(f"no table row for pattern {pattern} at gap {gap}")


def row_holds(row: TableRow, inst: TGRSInstance) -> bool:
    """Predicted self-orthogonality of a lambda-family instance in this row."""
    if not row.verdict:
        return False
    return row.predicate(inst) if row.predicate else True


def row_instance(row: TableRow, F: Field, k: int, gap: int, rng, positive: bool) -> TGRSInstance | None:
    """A lambda-family instance in this row; ``positive`` asks for the condition to hold.

    Returns None when no such instance is reachable in F (e.g. a solver
    needs to divide by 2 in characteristic 2).
    """
    n = 2 * k + gap
    if n > F.q:
        return None
    constraint = None
    if positive and row.points is not None:
        constraint = lambda S, f=row.points: f(F, S)  # noqa: E731
    try:
        ev = lambda_eval(F, n, rng, constraint, max_batches=25)
    except SearchBoundExceeded:
        return None
    vals = None
    if positive and row.solve is not None:
        try:
            vals = row.solve(ev, rng)
        except (DivisionByZero, ZeroDivisionError):
            return None
        if vals is None or any(not x for x in vals):
            return None
    if vals is None:
        vals = tuple(F.random(rng, nonzero=True) for _ in range(row.pattern.count("1")))
    ent = tuple(x if x is not None else F.zero for x in _place(row.pattern, vals))
    try:
        return TGRSInstance(ev, k, TwistMatrix("A1", ent))
    except CaseNotCovered:  # pragma: no cover
        return None


def table_fields() -> list[Field]:
    return [GF(17), GF(5, 2), GF(7, 2), GF(2, 4), GF(2, 5)]


@dataclass
class RowResult:
    row: TableRow
    tested: int = 0
    positives: int = 0
    mismatches: int = 0
    example: TGRSInstance | None = None


def sweep_table(rng, per_cell: int = 6, fields: list[Field] | None = None) -> list[RowResult]:
    """Check every table cell against the Gram test on lambda-family instances."""
    results = []
    for row in TABLE_ROWS:
        res = RowResult(row)
        for F in fields or table_fields():
            for gap in row.gaps():
                for k in (2, 3):
                    for j in range(per_cell):
                        positive = row.verdict and j % 2 == 0
                        inst = row_instance(row, F, k, gap, rng, positive)
                        if inst is None:
                            continue
                        assert lambda_condition(inst.eval) is not None
                        predicted = row_holds(row, inst)
                        actual = gram_is_zero(inst)
                        res.tested += 1
                        res.positives += actual
                        if predicted != actual:
                            res.mismatches += 1
                            res.example = res.example or inst
        results.append(res)
    return results
