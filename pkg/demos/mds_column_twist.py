"""
Which column twists keep the code MDS?
======================================

Fix eight points of GF(17) and k = 3, twist with Gamma = [[0, eta1], [0, eta2]]
and scan every (eta1, eta2).  The subset predicate and the minimum distance
should paint the same picture.
"""

# %%
import numpy as np

from tgrs.code import min_distance
from tgrs.criteria import column_shape_predicate, is_mds
from tgrs.gf import GF
from tgrs.twisted import TGRSInstance, TwistMatrix, eval_data

F = GF(17)
alpha = [F(i) for i in range(8)]
ev = eval_data(alpha, [F.one] * 8)
k = 3

grid = np.zeros((17, 16), dtype=int)  # eta1 in 0..16, eta2 in 1..16
for e1 in range(17):
    for e2 in range(1, 17):
        inst = TGRSInstance(ev, k, TwistMatrix.a1(0, e1, 0, e2, field=F))
        grid[e1, e2 - 1] = is_mds(inst)

print(grid)
print("MDS fraction:", grid.mean().round(3))

# %%
# the subset predicate agrees everywhere
pred = np.array(
    [
        [column_shape_predicate(TGRSInstance(ev, k, TwistMatrix.a1(0, e1, 0, e2, field=F))) for e2 in range(1, 17)]
        for e1 in range(17)
    ],
    dtype=int,
)
print("same picture:", np.array_equal(pred, grid))

# %%
# spot check a few cells against the true minimum distance
rng = np.random.default_rng(1)
for e1, e2 in rng.integers(1, 17, size=(5, 2)):
    inst = TGRSInstance(ev, k, TwistMatrix.a1(0, int(e1), 0, int(e2), field=F))
    d = min_distance(inst.code())
    print(int(e1), int(e2), "d =", d, "MDS" if d == 8 - k + 1 else "")
