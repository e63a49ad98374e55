"""Twisted generalized Reed-Solomon codes.

A TGRS code evaluates ``v_i f(alpha_i)`` over polynomials
``f_m = x^(m-1) + sum_j A[m][j] x^(k-1+j)``, m = 1..k, where A is a k x (n-k)
twist matrix.  Two shapes carry the theory:

* ``A1``: only rows k-1 and k are twisted, in the first two columns
  (entries eta11, eta12, eta21, eta22);
* ``A2``: only the first row is twisted, by eta_1..eta_{n-k} with
  eta_{n-k} != 0.

Symmetric-function data follows the signed convention
``prod (x - alpha_i) = sum_i sigma_i x^(n-i)``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .code import LinearCode
from .errors import (
    DuplicateAlpha,
    InvalidDimensions,
    RankDeficient,
    ShapeMismatch,
    ZeroLeadingTwist,
    ZeroV,
)
from .fla import MatrixGF
from .gf import Field, FieldElement, Polynomial

A1_KEYS = ("eta11", "eta12", "eta21", "eta22")


@dataclass(frozen=True)
class EvalData:
    field: Field
    alpha: tuple[FieldElement, ...]
    v: tuple[FieldElement, ...]
    sigma: tuple[FieldElement, ...]
    u: tuple[FieldElement, ...]
    lam: tuple[FieldElement, ...]

    @property
    def n(self) -> int:
        return len(self.alpha)

    def node_polynomial(self) -> Polynomial:
        """prod (x - alpha_i)."""
        return Polynomial(self.field, list(reversed(self.sigma)))

    def ev(self, f: Polynomial) -> list[FieldElement]:
        return [vi * f(ai) for ai, vi in zip(self.alpha, self.v)]


def eval_data(alpha: Sequence[FieldElement], v: Sequence[FieldElement], field: Field | None = None) -> EvalData:
    F = field or alpha[0].field
    alpha = tuple(F(a) for a in alpha)
    v = tuple(F(x) for x in v)
    if len(alpha) != len(v):
        raise InvalidDimensions(f"{len(alpha)} evaluation points but {len(v)} multipliers")
    if len(set(a.value for a in alpha)) != len(alpha):
        raise DuplicateAlpha("evaluation points must be pairwise distinct")
    if any(not x for x in v):
        raise ZeroV("column multipliers must be nonzero")
    n = len(alpha)
    node = Polynomial.from_roots(F, alpha)
    sigma = tuple(node[n - i] for i in range(n + 1))
    u = []
    for i, ai in enumerate(alpha):
        prod = F.one
        for j, aj in enumerate(alpha):
            if j != i:
                prod = prod * (ai - aj)
        u.append(prod.inverse())
    # forward substitution on the lower-triangular Toeplitz system (sigma_0 = 1)
    lam = [F.one]
    for t in range(1, n + 1):
        acc = F.zero
        for j in range(1, t + 1):
            acc = acc + sigma[j] * lam[t - j]
        lam.append(-acc)
    return EvalData(F, alpha, v, sigma, tuple(u), tuple(lam))


def reduce_leading_coeff(ev: EvalData, t: int) -> FieldElement:
    """Coefficient of x^(n-1) in x^(n-1+t) mod prod (x - alpha_i)."""
    if not 0 <= t <= ev.n:
        raise ValueError(f"t = {t} outside 0..{ev.n}")
    n = ev.n
    return (Polynomial.monomial(ev.field, n - 1 + t) % ev.node_polynomial())[n - 1]


@dataclass(frozen=True)
class TwistMatrix:
    """A1 entries ``{"eta11", "eta12", "eta21", "eta22"}`` or A2 entries eta_1..eta_{n-k}."""

    shape: str
    entries: tuple[FieldElement, ...]

    @classmethod
    def a1(cls, eta11, eta12, eta21, eta22, field: Field | None = None) -> TwistMatrix:
        vals = [eta11, eta12, eta21, eta22]
        F = field or next(x.field for x in vals if isinstance(x, FieldElement))
        return cls("A1", tuple(F(x) for x in vals))

    @classmethod
    def a2(cls, eta: Sequence, field: Field | None = None) -> TwistMatrix:
        F = field or next(x.field for x in eta if isinstance(x, FieldElement))
        return cls("A2", tuple(F(x) for x in eta))

    def __getitem__(self, key: str) -> FieldElement:
        return self.entries[A1_KEYS.index(key)]

    def matrix(self, k: int, n: int) -> list[list[FieldElement]]:
        """The full k x (n-k) matrix A(eta)."""
        F = self.entries[0].field
        A = [[F.zero] * (n - k) for _ in range(k)]
        if self.shape == "A1":
            e11, e12, e21, e22 = self.entries
            A[k - 2][0], A[k - 2][1] = e11, e12
            A[k - 1][0], A[k - 1][1] = e21, e22
        else:
            A[0] = list(self.entries)
        return A

    def to_json(self) -> dict:
        vals = [x.to_json() for x in self.entries]
        if self.shape == "A1":
            return {"shape": "A1", "entries": dict(zip(A1_KEYS, vals))}
        return {"shape": "A2", "entries": vals}

    @classmethod
    def from_json(cls, F: Field, obj: dict) -> TwistMatrix:
        shape = obj["shape"]
        ent = obj["entries"]
        if shape == "A1":
            if isinstance(ent, dict):
                ent = [ent[key] for key in A1_KEYS]
            return cls("A1", tuple(F.parse(x) for x in ent))
        if shape == "A2":
            return cls("A2", tuple(F.parse(x) for x in ent))
        raise ShapeMismatch(f"unknown twist shape {shape!r}")


def b_recursion(sigma: Sequence[FieldElement], eta: Sequence[FieldElement]) -> list[FieldElement]:
    """b_1..b_{n-k-1} for the A2 parity-check matrix; eta is eta_1..eta_{n-k}."""
    r = len(eta)
    lead = eta[r - 1]
    if not lead:
        raise ZeroLeadingTwist("eta_{n-k} must be nonzero")
    b: list[FieldElement] = []
    for i in range(1, r):
        acc = sigma[i] - eta[r - i - 1] / lead  # eta_{n-k-i}
        for j in range(1, i):
            acc = acc - sigma[i - j] * b[j - 1]
        b.append(acc)
    return b


class TGRSInstance:
    """Evaluation data, dimension and twist of a TGRS code."""

    def __init__(self, ev: EvalData, k: int, twist: TwistMatrix) -> None:
        n = ev.n
        if not 2 <= k < n:
            raise InvalidDimensions(f"need 2 <= k < n, got k={k}, n={n}")
        if twist.shape == "A1":
            if len(twist.entries) != 4:
                raise ShapeMismatch("A1 takes four entries")
            if n - k < 2:
                raise InvalidDimensions("the A1 shape needs n - k >= 2")
        elif twist.shape == "A2":
            if len(twist.entries) != n - k:
                raise ShapeMismatch(f"A2 takes n - k = {n - k} entries, got {len(twist.entries)}")
            if not twist.entries[-1]:
                raise ZeroLeadingTwist("eta_{n-k} must be nonzero")
        else:
            raise ShapeMismatch(f"unknown twist shape {twist.shape!r}")
        if any(x.field != ev.field for x in twist.entries):
            raise ShapeMismatch("twist entries live in a different field")
        self.eval = ev
        self.k = k
        self.twist = twist
        self.b = b_recursion(ev.sigma, twist.entries) if twist.shape == "A2" else None

    @classmethod
    def build(cls, alpha, v, k: int, twist: TwistMatrix) -> TGRSInstance:
        return cls(eval_data(alpha, v), k, twist)

    @property
    def field(self) -> Field:
        return self.eval.field

    @property
    def n(self) -> int:
        return self.eval.n

    @property
    def shape(self) -> str:
        return self.twist.shape

    def eta(self, i: int, j: int | None = None) -> FieldElement:
        """eta_ij for A1 (1-based) or eta_i for A2."""
        if self.shape == "A1":
            return self.twist.entries[2 * (i - 1) + (j - 1)]
        return self.twist.entries[i - 1]

    def generator(self) -> MatrixGF:
        G = build_g1(self) if self.shape == "A1" else build_g2(self)
        if G.rank() != self.k:
            raise RankDeficient("generator matrix lost rank")
        return G

    def parity_check(self) -> MatrixGF:
        return build_h1(self) if self.shape == "A1" else build_h2(self)

    def code(self) -> LinearCode:
        return LinearCode(self.generator())

    def with_twist(self, twist: TwistMatrix) -> TGRSInstance:
        return TGRSInstance(self.eval, self.k, twist)

    def to_json(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "k": self.k,
            "alpha": [a.to_json() for a in self.eval.alpha],
            "v": [x.to_json() for x in self.eval.v],
            "twist": self.twist.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> TGRSInstance:
        F = Field.from_dict(obj["field"])
        alpha = [F.parse(a) for a in obj["alpha"]]
        v = [F.parse(x) for x in obj["v"]]
        return cls(eval_data(alpha, v, F), int(obj["k"]), TwistMatrix.from_json(F, obj["twist"]))

    def __repr__(self) -> str:
        return f"TGRSInstance({self.shape}, n={self.n}, k={self.k}, {self.field.name})"


def twisted_polynomials(ev: EvalData, k: int, A: Sequence[Sequence]) -> list[Polynomial]:
    """f_m = x^(m-1) + sum_j A[m][j] x^(k-1+j) for m = 1..k."""
    F = ev.field
    n = ev.n
    polys = []
    for m in range(k):
        coeffs = [F.zero] * n
        coeffs[m] = F.one
        for j in range(n - k):
            coeffs[k + j] = coeffs[k + j] + F(A[m][j])
        polys.append(Polynomial(F, coeffs))
    return polys


def build_general(ev: EvalData, k: int, A: Sequence[Sequence]) -> MatrixGF:
    """Generator matrix of the TGRS code for an arbitrary k x (n-k) twist matrix."""
    if len(A) != k or any(len(row) != ev.n - k for row in A):
        raise ShapeMismatch(f"twist matrix must be {k} x {ev.n - k}")
    return MatrixGF(ev.field, [ev.ev(f) for f in twisted_polynomials(ev, k, A)])


def build_g1(inst: TGRSInstance) -> MatrixGF:
    if inst.shape != "A1":
        raise ShapeMismatch("build_g1 needs an A1 instance")
    return build_general(inst.eval, inst.k, inst.twist.matrix(inst.k, inst.n))


def build_g2(inst: TGRSInstance) -> MatrixGF:
    if inst.shape != "A2":
        raise ShapeMismatch("build_g2 needs an A2 instance")
    return build_general(inst.eval, inst.k, inst.twist.matrix(inst.k, inst.n))


def build_h1(inst: TGRSInstance) -> MatrixGF:
    """Parity-check matrix of an A1 code, row by row as in the standard display."""
    if inst.shape != "A1":
        raise ShapeMismatch("build_h1 needs an A1 instance")
    ev, k, n = inst.eval, inst.k, inst.n
    r = n - k
    s = ev.sigma
    eta = inst.eta
    rows = []
    for i in range(r - 2):
        rows.append([uj / vj * aj**i for aj, uj, vj in zip(ev.alpha, ev.u, ev.v)])
    second, last = [], []
    for aj, uj, vj in zip(ev.alpha, ev.u, ev.v):
        w = uj / vj * aj ** (r - 2)
        # tails[i] = sum_{t=0}^{4-i} sigma_t alpha^(4-i-t)
        tails = {i: sum((s[t] * aj ** (4 - i - t) for t in range(5 - i)), ev.field.zero) for i in (1, 2)}
        second.append(w * (1 - eta(1, 2) * tails[1] - eta(2, 2) * tails[2]))
        last.append(w * (s[0] * aj + s[1] - eta(1, 1) * tails[1] - eta(2, 1) * tails[2]))
    rows += [second, last]
    return MatrixGF(ev.field, rows)


def build_h2(inst: TGRSInstance) -> MatrixGF:
    """Parity-check matrix of an A2 code built from the b recursion."""
    if inst.shape != "A2":
        raise ShapeMismatch("build_h2 needs an A2 instance")
    ev, k, n = inst.eval, inst.k, inst.n
    lead = inst.twist.entries[-1]
    s = ev.sigma
    first = []
    for aj, uj, vj in zip(ev.alpha, ev.u, ev.v):
        tail = sum((s[n - 1 - i] * aj**i for i in range(n)), ev.field.zero)
        first.append(uj / vj * (1 - lead * tail))
    rows = [first]
    for i, bi in enumerate(inst.b, start=1):
        rows.append([uj / vj * (bi + aj**i) for aj, uj, vj in zip(ev.alpha, ev.u, ev.v)])
    return MatrixGF(ev.field, rows)
