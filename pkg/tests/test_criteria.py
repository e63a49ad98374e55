import itertools

import numpy as np
import pytest

from tgrs.code import min_distance
from tgrs.criteria import (
    block_case,
    check_block_so,
    check_line_so,
    check_so,
    column_shape_predicate,
    corollary_not_so,
    gram_is_zero,
    is_mds,
    lambda_condition,
    line_case,
    mds_witness,
    minors_nonzero,
    reduction_witness,
    row_shape_predicate,
    so_oracle_agree,
)
from tgrs.errors import BadSubset, CaseNotCovered, RankDeficient, ShapeMismatch
from tgrs.families import DIFFERENTIAL_FIELDS, differential_sizes, lambda_eval, random_a1, random_a2, random_eval
from tgrs.gf import GF
from tgrs.twisted import TGRSInstance, TwistMatrix, eval_data

FIELDS = [GF(p, h) for p, h in DIFFERENTIAL_FIELDS]


@pytest.mark.parametrize("make", [random_a1, random_a2], ids=["A1", "A2"])
def test_criterion_matches_gram(make):
    rng = np.random.default_rng(7)
    seen = {True: 0, False: 0}
    for i in range(150):
        F = FIELDS[i % len(FIELDS)]
        n, k = differential_sizes(F, rng)
        if 2 * k > n:
            continue
        inst = make(F, n, k, rng)
        assert so_oracle_agree(inst), inst.to_json()
        seen[gram_is_zero(inst)] += 1
    # the generators must exercise both verdicts
    assert seen[True] >= 20 and seen[False] >= 20


def test_case_dispatch():
    assert [block_case(2 * k + g, k) for k, g in ((3, 0), (3, 1), (3, 2), (3, 3), (3, 4), (2, 9))] == [5, 4, 3, 2, 1, 1]
    assert line_case(8, 4) == 2 and line_case(9, 4) == 1 and line_case(12, 3) == 1
    with pytest.raises(CaseNotCovered):
        block_case(7, 4)
    with pytest.raises(CaseNotCovered):
        line_case(5, 3)


def test_wrong_shape_rejected():
    F = GF(7)
    ev = random_eval(F, 6, np.random.default_rng(0))
    a2 = TGRSInstance(ev, 3, TwistMatrix.a2([0, 0, 1], field=F))
    a1 = TGRSInstance(ev, 3, TwistMatrix.a1(0, 0, 0, 1, field=F))
    with pytest.raises(ShapeMismatch):
        check_block_so(a2)
    with pytest.raises(ShapeMismatch):
        check_line_so(a1)


def test_failed_conditions_are_reported():
    F = GF(5, 2)
    rng = np.random.default_rng(3)
    ev = lambda_eval(F, 8, rng)
    inst = TGRSInstance(ev, 4, TwistMatrix.a1(0, 0, 0, 1, field=F))  # Case 5, not self-dual
    dec = check_so(inst)
    assert dec.applicable_case == "block/Case 5" and dec.claim == "self-dual"
    assert not dec.verdict and dec.failed_conditions
    assert dec.lam is not None
    assert dec.to_dict()["failed_conditions"][0]["name"].startswith("G1''")


def _case1_instance(F, alpha, k, c):
    """v_i^2 = u_i (alpha_i + c): a degree-one factor instead of a constant lambda."""
    n = len(alpha)
    ev0 = eval_data(alpha, [F.one] * n)
    v = []
    for a, u in zip(ev0.alpha, ev0.u):
        t = u * (a + c)
        if not t or (F.p != 2 and not t.is_square()):
            return None
        v.append(t.sqrt())
    return TGRSInstance(eval_data(alpha, v), k, TwistMatrix.a1(1, 1, 1, 1, field=F))


def test_case1_lambda_condition_not_necessary():
    """For n >= 2k + 5 the code can be self-orthogonal without a constant lambda.

    Every product of two generator polynomials has degree <= 2k + 2, so with
    v_i^2 = u_i h(alpha_i) and deg h <= n - 2k - 4 the Gram entries are
    coefficients of x^(n-1) in polynomials of degree <= n - 2 and vanish.
    The closed-form check still demands the lambda condition and says no.
    """
    F = GF(2, 4)
    inst = _case1_instance(F, [F.from_int(i) for i in range(1, 10)], 2, F.zero)
    assert lambda_condition(inst.eval) is None
    assert gram_is_zero(inst)
    dec = check_block_so(inst)
    assert dec.applicable_case == "block/Case 1" and not dec.verdict
    assert [c.name for c in dec.failed_conditions] == ["lambda-condition"]

    rng = np.random.default_rng(0)
    found = 0
    for F in (GF(17), GF(5, 2)):
        for _ in range(20000):
            alpha = [F.from_int(int(x)) for x in rng.choice(F.q, 9, replace=False)]
            inst = _case1_instance(F, alpha, 2, F.random(rng))
            if inst is not None:
                assert gram_is_zero(inst) and not check_block_so(inst).verdict
                found += 1
                break
    assert found == 2


def test_case1_lambda_condition_necessary_at_2k_plus_4():
    # here deg h <= 0, so the same construction collapses to a constant lambda
    F = GF(2, 4)
    rng = np.random.default_rng(1)
    for _ in range(100):
        ev = random_eval(F, 8, rng)
        inst = TGRSInstance(ev, 2, TwistMatrix.a1(1, 1, 1, 1, field=F))
        assert gram_is_zero(inst) == (lambda_condition(ev) is not None)


def test_negative_corollaries():
    rng = np.random.default_rng(9)
    count = 0
    for F in (GF(5, 2), GF(7, 2), GF(17), GF(2, 4)):
        for k in (2, 3, 4):
            for gap, masks in ((2, ("1001", "0110")), (3, ("0001",))):
                n = 2 * k + gap
                if n > F.q:
                    continue
                for mask in masks:
                    ev = lambda_eval(F, n, rng)
                    ent = tuple(F.random(rng, nonzero=True) if m == "1" else F.zero for m in mask)
                    inst = TGRSInstance(ev, k, TwistMatrix("A1", ent))
                    assert corollary_not_so(inst)
                    assert not gram_is_zero(inst)
                    assert not check_so(inst).verdict
                    count += 1
    assert count >= 30


def _small_instances(rng, count):
    fields = [GF(2, 3), GF(2, 4), GF(3, 2), GF(5, 2), GF(7, 2), GF(11), GF(13)]
    for i in range(count):
        F = fields[i % len(fields)]
        n = int(rng.integers(5, min(9, F.q) + 1))
        k = int(rng.integers(2, n - 1))
        ev = random_eval(F, n, rng)
        if rng.random() < 0.5:
            ent = tuple(F.random(rng) if rng.random() < 0.6 else F.zero for _ in range(4))
            tw = TwistMatrix("A1", ent)
        else:
            tw = TwistMatrix("A2", (*(F.random(rng) for _ in range(n - k - 1)), F.random(rng, nonzero=True)))
        yield TGRSInstance(ev, k, tw)


def test_mds_three_ways():
    rng = np.random.default_rng(4)
    labels = {True: 0, False: 0}
    for inst in _small_instances(rng, 120):
        try:
            C = inst.code()
        except RankDeficient:
            # every k x k minor of a rank-deficient generator vanishes
            assert not is_mds(inst)
            continue
        m = is_mds(inst)
        assert m == minors_nonzero(inst) == (min_distance(C) == inst.n - inst.k + 1)
        labels[m] += 1
    assert labels[True] >= 10 and labels[False] >= 10


def test_witnesses_equal_scaled_minors():
    rng = np.random.default_rng(8)
    for inst in itertools.islice(_small_instances(rng, 60), 60):
        ev, k = inst.eval, inst.k
        A = inst.twist.matrix(k, inst.n)
        try:
            G = inst.generator()
        except RankDeficient:
            G = None
        for I in itertools.islice(itertools.combinations(range(inst.n), k), 15):
            w1 = mds_witness(ev, A, I)
            w2 = reduction_witness(ev, A, I)
            assert w1 == w2
            # minor = witness * Vandermonde(alpha_I) * prod v_I
            vdm = ev.field.one
            for a, b in itertools.combinations(I, 2):
                vdm = vdm * (ev.alpha[b] - ev.alpha[a])
            scale = vdm
            for i in I:
                scale = scale * ev.v[i]
            if G is not None:
                assert G.columns(I).det() == w1 * scale


def test_bad_subset():
    F = GF(7)
    ev = random_eval(F, 6, np.random.default_rng(0))
    A = TwistMatrix.a2([0, 0, 1], field=F).matrix(3, 6)
    with pytest.raises(BadSubset):
        mds_witness(ev, A, [0, 0, 1])
    with pytest.raises(BadSubset):
        mds_witness(ev, A, [0, 1, 7])


def _shape_instances(rng, pattern):
    for F in (GF(2, 3), GF(2, 4), GF(3, 2), GF(5, 2), GF(7, 2), GF(11), GF(13)):
        for _ in range(30):
            n = int(rng.integers(5, min(10, F.q) + 1))
            k = int(rng.integers(2, n - 1))
            e1, e2 = F.random(rng), F.random(rng, nonzero=True)
            ent = (F.zero, e1, F.zero, e2) if pattern == "column" else (F.zero, F.zero, e1, e2)
            yield TGRSInstance(random_eval(F, n, rng), k, TwistMatrix("A1", ent))


def test_row_shape_predicate():
    rng = np.random.default_rng(12)
    for inst in _shape_instances(rng, "row"):
        assert row_shape_predicate(inst) == is_mds(inst)


def test_column_shape_predicate_corrected_form():
    rng = np.random.default_rng(13)
    literal_wrong = 0
    for inst in _shape_instances(rng, "column"):
        m = is_mds(inst)
        assert column_shape_predicate(inst) == m
        literal_wrong += column_shape_predicate(inst, literal=True) != m
    # the extra term in the literal statement changes the verdict on real instances
    assert literal_wrong > 0


def test_shape_predicates_reject_other_shapes():
    F = GF(7)
    inst = TGRSInstance(random_eval(F, 6, np.random.default_rng(0)), 3, TwistMatrix.a1(1, 0, 0, 1, field=F))
    with pytest.raises(ShapeMismatch):
        row_shape_predicate(inst)
    with pytest.raises(ShapeMismatch):
        column_shape_predicate(inst)
