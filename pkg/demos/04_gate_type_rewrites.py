# coding: utf-8
# # Rewriting circuits by gate type
#
# With one constant-1 wire, NOT and CNOT gates can be traded for gates with
# more controls. The one-NOT pipeline shows that a single NOT suffices.

# %%
from nctsynth.circuit import Circuit, CostWeights, Input, cnot, cost, not_, realized_function, tof
from nctsynth.errors import NoFreeWire
from nctsynth.function import random_function
from nctsynth.synthesis import decompose_mct, eliminate_cnots, eliminate_nots, mmd_baseline, one_not_pipeline
from nctsynth.verify import verify_weak

# %%
c = Circuit(3, tuple(Input(i + 1) for i in range(3)), (not_(0), cnot(0, 1), tof(0, 1, 2)), (0, 1, 2))
for rewrite in (eliminate_nots, eliminate_cnots):
    d = rewrite(c)
    print(rewrite.__name__, [str(g) for g in d.gates], realized_function(d) == realized_function(c))

# %% [markdown]
# The baseline synthesizer may emit multiple-control gates. Decomposing them
# borrows an idle wire and restores it afterwards. On the bare n wires a gate
# with n-1 controls has no idle wire to borrow.

# %%
f = random_function(4, seed=8)
base = mmd_baseline(f)
print("baseline gates:", len(base), "of which MCT:", base.count("mct"))
try:
    decompose_mct(base)
except NoFreeWire as exc:
    print("cannot decompose in place:", exc)

# %%
c = one_not_pipeline(f)
print("one-NOT:", cost(c), verify_weak(c, f).ok)
print("NOT-only cost:", cost(c, CostWeights(1, 0, 0)).total, " CNOT-only cost:", cost(c, CostWeights(0, 1, 0)).total)
