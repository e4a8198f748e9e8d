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
# # Random tuples over R and C
#
# Over an infinite field the non-generating tuples form a thin set, so a
# random pair almost surely generates.  One matrix is never enough once
# the poset has a covering pair.

# %%
import numpy as np

from incgen import monte_carlo, standard_poset

chain3 = standard_poset("chain", 3)
for field in ("real", "complex"):
    margins = []
    rep = monte_carlo(chain3, field, 2, 10_000, seed=42, margins_out=margins)
    print(field, rep.fraction, f"{rep.min_margin:.2e}", f"median margin {np.median(margins):.3f}")

# %%
print(monte_carlo(standard_poset("chain", 2), "real", 1, 1000, seed=1).failures)

# %% [markdown]
# Exact rational check of a hand-picked pair:

# %%
from incgen.realcomplex import generates_exact

A = [[1, 0, 0], [0, 2, 0], [0, 0, 3]]
B = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
print(generates_exact(chain3, [A, B]), generates_exact(chain3, [A]))
