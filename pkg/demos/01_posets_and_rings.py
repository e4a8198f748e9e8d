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
# # Posets and base rings
#
# An incidence ring lives on a finite poset: entry (i, j) may be nonzero
# only when i <= j.  Two numbers drive everything later on, the size of the
# relation (``rho``) and the number of covering pairs (``c``).

# %%
from incgen import parse_poset, parse_ring, standard_poset, cover_data

# %%
chain = standard_poset("chain", 3)
print(chain.n, chain.rho, chain.c)
print(cover_data(chain).to_json())

# %% [markdown]
# A poset file starts with ``n <int>`` and then has one ``rel <i> <j>`` line per
# relation (1-based).  The
# transitive closure is filled in.  Here is the "V" shape: 1 and 2 sit
# below 3.

# %%
v = parse_poset("n 3\nrel 1 3\nrel 2 3\n")
print(v.rho, v.c, v.covers)

# %% [markdown]
# Rings are written as strings.  Each one knows its semisimple quotient
# (a list of ``(k, q)`` blocks ``M_k(GF(q))``) and the size of its radical.

# %%
for spec in ("GF(4)", "M(2,GF(2))", "GF(2)xGF(3)", "Z/8"):
    R = parse_ring(spec)
    print(f"{spec:12s} size={R.size:3d} blocks={R.components} |J|={R.jsize}")
