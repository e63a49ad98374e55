import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tgrs.code import (
    LinearCode,
    classify,
    dual,
    hull_dim,
    is_self_dual,
    is_self_orthogonal,
    mds_class,
    min_distance,
    quantum_derive,
    weight_outside,
)
from tgrs.errors import BoundExceeded, NotSelfOrthogonal, RankDeficient
from tgrs.fla import MatrixGF
from tgrs.gf import GF

from conftest import elements, fields

HAMMING_H = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


def codewords(C: LinearCode):
    F = C.field
    G = C.gen
    for coeffs in itertools.product(range(F.q), repeat=C.k):
        msg = [F.from_int(c) for c in coeffs]
        yield [sum((m * G[i, j] for i, m in enumerate(msg)), F.zero) for j in range(C.n)]


def brute_weight_outside(C: LinearCode) -> int:
    D = dual(C)
    return min(sum(1 for x in w if x) for w in codewords(D) if not C.contains(w))


@st.composite
def codes(draw, max_k=3, max_n=7):
    F = draw(fields([(2, 1), (3, 1), (2, 2), (5, 1)]))
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(max_k, n)))
    rows = [[draw(elements(F)) for _ in range(n)] for _ in range(k)]
    M = MatrixGF(F, rows)
    if M.rank() < k:
        return LinearCode.from_rows(M) if M.rank() else None
    return LinearCode(M)


def test_steane():
    F = GF(2)
    simplex = LinearCode(MatrixGF(F, HAMMING_H))
    assert (simplex.n, simplex.k, min_distance(simplex)) == (7, 3, 4)
    hamming = dual(simplex)
    assert min_distance(hamming) == 3
    assert is_self_orthogonal(simplex) and not is_self_dual(simplex)
    assert hull_dim(simplex) == 3
    assert str(quantum_derive(simplex)) == "[[7,1,3]]"


def test_grs_is_mds():
    F = GF(11)
    alpha = list(range(8))
    for k in (2, 3, 4, 5):
        G = MatrixGF(F, [[pow(a, i, 11) for a in alpha] for i in range(k)])
        C = LinearCode(G)
        rep = classify(C)
        assert rep.d == 8 - k + 1 and rep.mds_class == "MDS" and rep.dual_d == k + 1


@given(codes())
def test_dual_properties(C):
    if C is None or C.k == C.n:
        return
    D = dual(C)
    assert D.k == C.n - C.k
    if D.k:
        assert (C.gen @ D.gen.T).is_zero()
        assert dual(D).same_space(C)


@given(codes(max_k=4, max_n=8))
def test_distance_methods_agree(C):
    if C is None:
        return
    d = min_distance(C, "columns")
    assert d == min_distance(C, "enumerate")
    assert 1 <= d <= C.n - C.k + 1
    brute = min(sum(1 for x in w if x) for w in codewords(C) if any(w))
    assert d == brute


@given(codes(max_k=3, max_n=7))
def test_hull_dimension(C):
    if C is None or C.k == C.n:
        return
    D = dual(C)
    inside = sum(1 for w in codewords(C) if D.contains(w))
    assert inside == C.field.q ** hull_dim(C)


def test_weight_outside_against_enumeration():
    rng = np.random.default_rng(5)
    checked = 0
    # self-orthogonal codes as hulls of random codes
    for _ in range(400):
        F = GF(int(rng.choice([2, 3])))
        n = int(rng.integers(4, 8))
        k = int(rng.integers(1, n))
        M = MatrixGF(F, [[F.random(rng) for _ in range(n)] for _ in range(k)])
        if M.rank() < k:
            continue
        C = LinearCode(M)
        D = dual(C)
        Hm = C.gen.vstack(D.gen).kernel()  # vectors orthogonal to C + dual(C)
        if Hm.nrows == 0 or Hm.nrows == n:
            continue
        hull = LinearCode.from_rows(Hm)
        if not is_self_orthogonal(hull) or 2 * hull.k == n:
            continue
        assert weight_outside(hull) == brute_weight_outside(hull)
        checked += 1
    assert checked >= 20


def test_mds_class_labels():
    assert mds_class(8, 3, 6, 4) == "MDS"
    assert mds_class(8, 3, 5, 2) == "AMDS"
    assert mds_class(9, 4, 5, 4) == "NMDS"
    assert mds_class(9, 4, 3, 4) == "other"


def test_quantum_needs_self_orthogonal():
    F = GF(3)
    C = LinearCode(MatrixGF(F, [[1, 1, 0, 0]]))
    with pytest.raises(NotSelfOrthogonal):
        quantum_derive(C)


def test_self_dual_quantum_note():
    F = GF(3)
    # the ternary [4,2,3] tetracode is self-dual
    C = LinearCode(MatrixGF(F, [[1, 0, 1, 1], [0, 1, 1, 2]]))
    assert is_self_dual(C)
    q = quantum_derive(C)
    assert (q.kq, q.dq) == (0, 3) and "self-dual" in q.note


def test_bounds(monkeypatch):
    F = GF(2)
    with pytest.raises(RankDeficient):
        LinearCode(MatrixGF(F, [[1, 1], [1, 1]]))
    C = LinearCode(MatrixGF(F, [[1] * 6]))
    monkeypatch.setenv("TGRS_MAX_N", "5")
    with pytest.raises(BoundExceeded):
        min_distance(C)
    with pytest.raises(BoundExceeded):
        min_distance(LinearCode(MatrixGF(GF(7), [[1] * 3] * 1)), "enumerate", bound=5)
