"""
How often is a random twisted code self-orthogonal?
===================================================

Draw A1 and A2 instances over GF(25) with multipliers from the lambda family
(v_i^2 = lambda u_i), group them by the gap n - 2k, and compare the closed
form with the Gram matrix.
"""

# %%
import numpy as np

from tgrs.criteria import check_so, gram_is_zero
from tgrs.families import random_a1, random_a2
from tgrs.gf import GF

rng = np.random.default_rng(0)
F = GF(5, 2)

rows = []
for make, shape in ((random_a1, 0), (random_a2, 1)):
    for _ in range(300):
        n = int(rng.integers(6, 13))
        k = int(rng.integers(2, n // 2 + 1))
        inst = make(F, n, k, rng)
        rows.append((shape, n - 2 * k, gram_is_zero(inst), check_so(inst).verdict))

data = np.array(rows, dtype=int)
print(data.shape)

# %%
# columns: shape (0 = A1, 1 = A2), gap, Gram says SO, criterion says SO
print("disagreements:", int(np.sum(data[:, 2] != data[:, 3])))

for shape, name in ((0, "A1"), (1, "A2")):
    sub = data[data[:, 0] == shape]
    gaps = np.unique(sub[:, 1])
    rate = [sub[sub[:, 1] == g, 2].mean() for g in gaps]
    print(name, dict(zip(gaps.tolist(), np.round(rate, 2).tolist())))

# %%
# From n >= 2k + 4 on the twist no longer matters for A1; about a fifth of the
# draws use unrelated multipliers, and those are the misses
from tgrs.criteria import lambda_condition

big = [(lambda_condition(inst.eval) is not None, gram_is_zero(inst))
       for inst in (random_a1(F, 10, 3, rng) for _ in range(200))]
big = np.array(big, dtype=int)
print("lambda family:", big[big[:, 0] == 1, 1].mean(), " other:", big[big[:, 0] == 0, 1].mean())
