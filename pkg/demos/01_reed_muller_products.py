# coding: utf-8
# # Reed-Muller expansions and product networks
#
# Every output bit of a reversible function has a unique XOR-of-monomials form.
# This script computes it for a small function and then builds the network
# that generates every product term of a set of wires.

# %%
import numpy as np

from nctsynth.circuit import final_states
from nctsynth.function import from_permutation, pprm_of_column, pprm_of_output
from nctsynth.synthesis import product_circuit, product_count

# %% [markdown]
# Variable x1 is the most significant bit of an input index. The 3-bit
# function below swaps the two halves of the cube and mixes in a carry.

# %%
f = from_permutation([4, 5, 7, 6, 1, 0, 2, 3])
for i in range(1, f.n + 1):
    print(f"f{i} =", pprm_of_output(f, i).format())

# %% [markdown]
# The expansion of a single column works the same way. AND of two inputs:

# %%
print("x1 & x2 =", pprm_of_column([0, 0, 0, 1]).format())

# %% [markdown]
# Each new variable multiplies every product built so far, so m variables
# need 2^m - m - 1 Toffoli gates and no more.

# %%
for m in range(1, 7):
    c, wires = product_circuit(m)
    print(f"m={m}: {c.toffoli_count} Toffolis (2^m-m-1 = {product_count(m)}), width {c.width}")

# %%
c, wires = product_circuit(3)
state = final_states(c)
xs = np.arange(8)
for mask, w in sorted(wires.items()):
    expected = ((xs & mask) == mask).astype(int)
    assert np.array_equal(state[w].astype(int), expected)
print("all 7 products of 3 variables checked on all inputs")
