# coding: utf-8
# # Split synthesis of a random function
#
# The inputs are split into a high group of a variables and a low group of
# b = n - a. Products over both groups are shared by every output, which keeps
# the Toffoli count near sqrt(n) 2^(n/2).

# %%
import math

from nctsynth.circuit import cost
from nctsynth.function import random_function
from nctsynth.synthesis import optimal_split, pprm_split_synth, weak_toffoli_count
from nctsynth.verify import verify_weak

# %%
n = 6
f = random_function(n, seed=11)
for a in range(1, n):
    c = pprm_split_synth(f, a)
    print(f"a={a}: {c.toffoli_count:4d} Toffolis, formula {weak_toffoli_count(n, a):4d}, width {c.width}")

# %% [markdown]
# The best split and a check against the function on all 64 inputs. Skipping
# blocks whose sub-function is zero gives a smaller real circuit.

# %%
a = optimal_split(n)
c = pprm_split_synth(f, a)
print("optimal a:", a, verify_weak(c, f))
pruned = pprm_split_synth(f, a, prune=True)
print("pruned:", cost(pruned), verify_weak(pruned, f).ok)

# %% [markdown]
# Ratio of the best count to sqrt(n) 2^(n/2). It stays close to 3/sqrt(2)
# but small n can sit slightly above it because a must be an integer.

# %%
for n in (8, 12, 15, 20, 30, 40, 60):
    best = min(weak_toffoli_count(n, a) for a in range(1, n))
    print(f"n={n:2d}: ratio {best / (math.sqrt(n) * 2 ** (n / 2)):.4f}  (3/sqrt2 = {3 / math.sqrt(2):.4f})")
