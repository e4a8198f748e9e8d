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
# # How many tuples generate?
#
# The count is exact, so it comes back as a Python int and the probability
# as a ``Fraction``.

# %%
from incgen import count_by_enumeration, count_gen, parse_ring, probability_closed_form, standard_poset

chain2 = standard_poset("chain", 2)
gf2 = parse_ring("GF(2)")

for m in (1, 2, 3):
    rep = count_gen(chain2, gf2, m)
    print(m, rep.count, rep.total, rep.probability)

# %% [markdown]
# A single element never generates the 2x2 upper triangular matrices over
# GF(2), two do with probability 3/8.  The brute-force closure agrees:

# %%
print(count_by_enumeration(chain2, gf2, 2))

# %% [markdown]
# The same number written as a product of simple factors:

# %%
M2 = parse_ring("M(2,GF(2))")
print(count_gen(chain2, M2, 1).probability, probability_closed_form(chain2, M2, 1))

# %% [markdown]
# The radical of the base ring drops out of the probability entirely.

# %%
for spec in ("GF(2)", "Z/4", "Z/8"):
    print(spec, count_gen(chain2, parse_ring(spec), 2).probability)

# %% [markdown]
# Counts grow quickly, and nothing overflows.

# %%
big = count_gen(standard_poset("chain", 12), parse_ring("GF(9)"), 3)
print(len(str(big.count)), "digits,", float(big.probability))
