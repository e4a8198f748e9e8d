# ---
# jupyter:
#   jupytext:
#     formats: ipynb,py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
#       format_version: '1.3'
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Testing a specific tuple
#
# ``check_generates`` looks only at diagonals and at entries on covering
# pairs.  When it says no, the report points at the reason.

# %%
from incgen import IncMatrix, check_generates, generates_bruteforce, mgen, parse_ring, standard_poset

chain2 = standard_poset("chain", 2)
R = parse_ring("GF(2)")

a = IncMatrix.from_dense(chain2, R, [[1, 0], [0, 0]])
b = IncMatrix.from_dense(chain2, R, [[0, 1], [0, 0]])

for tup in ([a], [b], [a, b]):
    rep = check_generates(tup)
    print(rep.verdict, rep.failed_row_pair, rep.failed_cover, generates_bruteforce(tup))

# %% [markdown]
# Over a product ring the test runs once per factor.

# %%
anti = standard_poset("antichain", 2)
P = parse_ring("GF(2)xGF(3)")
x = IncMatrix.from_dense(anti, P, [[(1, 2), (0, 0)], [(0, 0), (0, 1)]])
print(check_generates([x]).to_json()["per_component"])

# %% [markdown]
# The smallest number of generators for a few antichains over GF(2):

# %%
for n in range(1, 9):
    print(n, mgen(standard_poset("antichain", n), R))
