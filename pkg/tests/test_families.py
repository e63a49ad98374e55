import itertools

import numpy as np
import pytest

from tgrs.criteria import gram_is_zero, lambda_condition
from tgrs.families import (
    TABLE_ROWS,
    lambda_eval,
    lambda_feasible,
    lambda_points,
    row_holds,
    row_instance,
    sweep_table,
    table_fields,
)
from tgrs.errors import SearchBoundExceeded
from tgrs.gf import GF
from tgrs.twisted import eval_data


def brute_lambda_sets(F, n):
    """Does some n-subset admit multipliers with v_i^2 = lambda u_i?  Checked with square roots."""
    for S in itertools.combinations(F.elements(), n):
        ev = eval_data(list(S), [F.one] * n)
        for lam in F.nonzero():
            if all((lam * u).is_square() for u in ev.u):
                return True
    return False


@pytest.mark.parametrize("p,h,n", [(11, 1, 6), (11, 1, 5), (13, 1, 7), (13, 1, 6), (3, 2, 7), (3, 2, 6)])
def test_lambda_feasibility_against_brute_force(p, h, n):
    F = GF(p, h)
    assert lambda_feasible(F, n) == brute_lambda_sets(F, n)


def test_lambda_points_give_lambda_family():
    rng = np.random.default_rng(0)
    for F in (GF(17), GF(5, 2), GF(2, 4)):
        for n in (5, 8, 11):
            ev = lambda_eval(F, n, rng)
            assert lambda_condition(ev) is not None


def test_infeasible_size_raises():
    with pytest.raises(SearchBoundExceeded):
        lambda_points(GF(11), 8, np.random.default_rng(0))


def test_table_rows_cover_every_cell():
    patterns = {r.pattern for r in TABLE_ROWS}
    assert len(patterns) == 10
    for F in table_fields():
        for n in range(4, 13):
            assert lambda_feasible(F, n)


def test_row_instances_follow_the_row():
    rng = np.random.default_rng(5)
    for row in TABLE_ROWS:
        if not row.verdict or not row.condition:
            continue
        for F in (GF(17), GF(7, 2)):
            inst = row_instance(row, F, 2, row.gaps()[0], rng, positive=True)
            if inst is None:
                continue
            assert row_holds(row, inst) and gram_is_zero(inst)


def test_sweep_matches_table():
    res = sweep_table(np.random.default_rng(2), per_cell=2)
    for r in res:
        assert r.mismatches == 0, r.row.label
        if r.row.verdict:
            assert r.positives > 0, r.row.label
        else:
            assert r.positives == 0, r.row.label
