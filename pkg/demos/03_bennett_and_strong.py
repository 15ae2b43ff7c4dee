# coding: utf-8
# # Clean circuits: Bennett wrapping and strong implementations
#
# A weak circuit leaves products lying around on its ancillae. Uncomputing
# them after the outputs are copied gives the map (x, y) -> (x, y ^ f(x)).

# %%
from nctsynth.circuit import serialize
from nctsynth.function import random_function
from nctsynth.synthesis import bennett_synth, bennett_toffoli_count, pprm_split_synth, strong_synth, weak_to_intermediate
from nctsynth.verify import verify_intermediate, verify_strong

# %%
n, a = 4, 2
f = random_function(n, seed=3)
c = bennett_synth(f, a)
print(f"Toffolis {c.toffoli_count} (formula {bennett_toffoli_count(n, a)}), width {c.width} "
      f"<= {2 ** a + 2 ** (n - a) + n + 1}")
print(verify_intermediate(c, f))

# %% [markdown]
# Any weak circuit can be wrapped the same way after the fact.

# %%
wrapped = weak_to_intermediate(pprm_split_synth(f, a))
print("wrapped weak circuit:", verify_intermediate(wrapped, f))

# %% [markdown]
# Composing the clean circuit for f with the one for its inverse and a
# swap of registers computes x -> f(x) in place.

# %%
s = strong_synth(f)
print("strong:", verify_strong(s, f), "width", s.width)
print(serialize(s).splitlines()[:6])
