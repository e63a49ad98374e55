"""Linear codes over finite fields: duals, hulls, minimum distance, quantum parameters."""

from __future__ import annotations

import itertools
import os
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import BoundExceeded, NotSelfOrthogonal, RankDeficient
from .fla import MatrixGF
from .gf import Field

DEFAULT_MAX_N = 20
DEFAULT_MAX_ENUMERATION = 1 << 22


def max_n() -> int:
    return int(os.environ.get("TGRS_MAX_N", DEFAULT_MAX_N))


def max_enumeration() -> int:
    return int(os.environ.get("TGRS_MAX_ENUMERATION", DEFAULT_MAX_ENUMERATION))


class LinearCode:
    """The row space of a full-rank k x n generator matrix."""

    def __init__(self, gen: MatrixGF) -> None:
        k, n = gen.shape
        if gen.rank() != k:
            raise RankDeficient(f"generator of shape {gen.shape} has rank {gen.rank()}")
        self.gen = gen
        self.field: Field = gen.field
        self.n = n
        self.k = k
        self._dual: LinearCode | None = None
        self._d: int | None = None

    @classmethod
    def from_rows(cls, M: MatrixGF) -> LinearCode:
        """Code spanned by the rows of M, which need not be independent."""
        R, r, _ = M.rref()
        return cls(MatrixGF._raw(M.field, R.rows[:r]))

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}] over {self.field.name}"

    def parity_check(self) -> MatrixGF:
        """Generator of the dual code in reduced echelon form."""
        return dual(self).gen

    def contains(self, x) -> bool:
        if self.k == self.n:
            return True
        return all(not y for y in self.parity_check().apply(x))

    def same_space(self, other: LinearCode) -> bool:
        if self.field != other.field or (self.n, self.k) != (other.n, other.k):
            return False
        return self.gen.rref()[0] == other.gen.rref()[0]


def dual(C: LinearCode) -> LinearCode:
    if C._dual is None:
        if C.k == C.n:
            raise BoundExceeded("the dual of the full space is the zero code")
        D = LinearCode(C.gen.kernel())
        D._dual = C
        C._dual = D
    return C._dual


def is_self_orthogonal(C: LinearCode) -> bool:
    return (C.gen @ C.gen.T).is_zero()


def is_self_dual(C: LinearCode) -> bool:
    return C.n == 2 * C.k and is_self_orthogonal(C)


def hull_dim(C: LinearCode) -> int:
    if C.k == C.n:
        return 0
    D = dual(C)
    return C.k + D.k - C.gen.vstack(D.gen).rank()


def _min_distance_columns(C: LinearCode) -> int:
    """Smallest number of linearly dependent columns of a parity-check matrix."""
    if C.k == C.n:
        return 1
    H = C.parity_check()
    n = C.n
    for w in range(1, n - C.k + 2):
        for S in itertools.combinations(range(n), w):
            if H.columns(S).rank() < w:
                return w
    raise AssertionError("Singleton bound violated")  # pragma: no cover


def _min_distance_enumerate(C: LinearCode, chunk: int = 1 << 16) -> int:
    """Minimum weight over all codewords, one representative per projective point."""
    F, k, n = C.field, C.k, C.n
    G = np.array(C.gen.rows, dtype=np.int64)
    best = n + 1
    for i in range(k):
        free = k - 1 - i
        total = F.q**free
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            acc = np.broadcast_to(G[i], (len(idx), n)).copy()
            for j in range(i + 1, k):
                digit = idx % F.q
                idx = idx // F.q
                acc = F.vadd(acc, F.vmul(digit[:, None], G[j][None, :]))
            best = min(best, int(np.count_nonzero(acc, axis=1).min()))
    return best


def min_distance(C: LinearCode, method: str = "columns", bound: int | None = None) -> int:
    """Minimum Hamming distance.

    ``method="columns"`` searches column subsets of the dual generator;
    ``method="enumerate"`` walks every codeword and needs q**k within the
    enumeration bound.
    """
    if method == "columns":
        limit = bound or max_n()
        if C.n > limit:
            raise BoundExceeded(f"n = {C.n} exceeds the subset-search bound {limit}")
        if C._d is None:
            C._d = _min_distance_columns(C)
        return C._d
    if method == "enumerate":
        limit = bound or max_enumeration()
        if C.field.q**C.k > limit:
            raise BoundExceeded(f"q^k = {C.field.q}^{C.k} exceeds the enumeration bound {limit}")
        return _min_distance_enumerate(C)
    raise ValueError(f"unknown method {method!r}")


def mds_class(n: int, k: int, d: int, dual_d: int | None) -> str:
    """MDS, AMDS, NMDS (defect 1 on both sides) or other."""
    defect = n - k + 1 - d
    if defect == 0:
        return "MDS"
    if defect == 1:
        # the dual has dimension n - k, so its defect is k + 1 - dual_d
        return "NMDS" if dual_d is not None and k + 1 - dual_d == 1 else "AMDS"
    return "other"


@dataclass
class QuantumParams:
    n: int
    kq: int
    dq: int
    saturates_singleton: bool
    note: str = ""

    def __str__(self) -> str:
        return f"[[{self.n},{self.kq},{self.dq}]]"


@dataclass
class CodeReport:
    field: str
    n: int
    k: int
    d: int
    singleton_defect: int
    mds_class: str
    self_orthogonal: bool
    self_dual: bool
    hull_dim: int
    dual_k: int
    dual_d: int | None
    quantum: QuantumParams | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)

    @property
    def dual_params(self) -> tuple[int, int, int | None]:
        return (self.n, self.dual_k, self.dual_d)

    def to_dict(self) -> dict:
        return asdict(self)

    def summary(self) -> str:
        lines = [
            f"code      [{self.n},{self.k},{self.d}] over {self.field}  ({self.mds_class}, defect {self.singleton_defect})",
            f"dual      [{self.n},{self.dual_k},{self.dual_d}]",
            f"hull dim  {self.hull_dim}  self-orthogonal={self.self_orthogonal}  self-dual={self.self_dual}",
        ]
        if self.quantum is not None:
            sat = "  saturates quantum Singleton" if self.quantum.saturates_singleton else ""
            lines.append(f"quantum   {self.quantum}{sat}")
        lines += [f"note      {n}" for n in self.notes]
        return "\n".join(lines)


def classify(C: LinearCode) -> CodeReport:
    d = min_distance(C)
    if C.k == C.n:
        dual_k, dual_d = 0, None
    else:
        dual_k, dual_d = C.n - C.k, min_distance(dual(C))
    so = is_self_orthogonal(C)
    return CodeReport(
        field=C.field.name,
        n=C.n,
        k=C.k,
        d=d,
        singleton_defect=C.n - C.k + 1 - d,
        mds_class=mds_class(C.n, C.k, d, dual_d),
        self_orthogonal=so,
        self_dual=so and C.n == 2 * C.k,
        hull_dim=hull_dim(C),
        dual_k=dual_k,
        dual_d=dual_d,
    )


def weight_outside(C: LinearCode) -> int:
    """wt(dual(C) minus C) for a self-orthogonal C with dual(C) != C.

    For each size w the dual words supported inside a w-set S form the kernel
    K_S of the generator restricted to S.  The first w with some K_S not
    contained in C is the answer: a word of dual(C) outside C with support T
    makes K_T escape C, and K_S escaping C yields such a word of weight <= |S|.
    """
    D = dual(C)
    G, H = C.gen, D.gen  # H generates dual(C), so H is a parity check of C
    n = C.n
    for w in range(min_distance(D), n + 1):
        for S in itertools.combinations(range(n), w):
            K = G.columns(S).kernel()
            if not K.nrows:
                continue
            if not (H.columns(S) @ K.T).is_zero():
                return w
    raise AssertionError("dual(C) is contained in C")  # pragma: no cover


def quantum_derive(C: LinearCode) -> QuantumParams:
    """[[n, n-2k, wt(dual(C) minus C)]] for a self-orthogonal code C."""
    if not is_self_orthogonal(C):
        raise NotSelfOrthogonal(f"{C!r} is not self-orthogonal")
    n, k = C.n, C.k
    kq = n - 2 * k
    D = dual(C)
    dual_d = min_distance(D)
    note = ""
    if kq == 0:
        # dual(C) == C: nothing lies outside, report the dual distance
        dq = dual_d
        note = "self-dual: dual(C) minus C is empty, dq reported as d(dual(C))"
    elif min_distance(C) > dual_d:
        dq = dual_d
    else:
        dq = weight_outside(C)
    return QuantumParams(n=n, kq=kq, dq=dq, saturates_singleton=kq == n - 2 * dq + 2, note=note)
