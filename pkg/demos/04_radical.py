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
# # The Jacobson radical
#
# Over ``Z/4`` the radical of the 2x2 upper triangular ring has diagonal
# entries in ``2Z/4`` and anything in the corner.

# %%
from incgen import IncMatrix, parse_ring, radical_data, standard_poset
from incgen.incidence import additive_span, all_elements, find_inverse

chain2 = standard_poset("chain", 2)
Z4 = parse_ring("Z/4")
rd = radical_data(chain2, Z4)
print(rd.size, [b.to_dense() for b in rd.basis])

# %% [markdown]
# Check by hand: every element of the span is quasi-regular.

# %%
span = additive_span(chain2, Z4, rd.basis)
one = IncMatrix.identity(chain2, Z4)
J = [x for x in all_elements(chain2, Z4) if x in span]
print(len(J), all(find_inverse(one - x) is not None for x in J))
