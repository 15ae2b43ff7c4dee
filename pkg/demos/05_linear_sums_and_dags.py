# coding: utf-8
# # Linear sums and the circuit DAG
#
# Every wire value is a parity of Toffoli products plus an affine function of
# the inputs. Recording those pieces for each Toffoli and output gives a DAG
# that determines the circuit's function.

# %%
from nctsynth.analysis import decoded_table, encode_dag, linear_sum
from nctsynth.circuit import final_states, pack_bits, random_circuit

# %%
c = random_circuit(3, 6, seed=5)
for g in c.gates:
    print(g)
for w in c.outputs:
    print(f"wire {w}: {linear_sum(c, w)}")

# %%
d = encode_dag(c)
print("vertex labels:", d.t_labels, d.f_labels)
print(d.matrix)
for edge in d.edges():
    print(edge)

# %% [markdown]
# Decoding the DAG gives back exactly what simulation produces on the outputs.

# %%
print(decoded_table(d))
print(tuple(int(v) for v in pack_bits(final_states(c)[list(c.outputs)])))
