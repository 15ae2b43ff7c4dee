# coding: utf-8
# # Counting bounds and T-count estimates

# %%
from nctsynth.analysis import bounds_report, crossing_search, discrepancy_report, format_tcount_table, lower_bound_001, tcount_table

# %% [markdown]
# Smallest number of Toffolis for which enough circuit DAGs exist to cover
# every n-bit reversible function.

# %%
print([lower_bound_001(n) for n in range(2, 11)])

# %% [markdown]
# T-count upper bounds from the Bennett-wrapped split construction. The n=3
# row differs from the published value by one Toffoli's worth of T gates.

# %%
print(format_tcount_table(tcount_table(3, 20)))
print(format_tcount_table(tcount_table(15, 15, 4)))

# %% [markdown]
# Weighting T gates at 50 CNOTs, the counting lower bound on CNOT+Toffoli
# circuits overtakes the T-count bound at n=27.

# %%
print("crossing:", crossing_search(2, 40))
d = discrepancy_report(50)
print(f"n=50: a={d.a} S={d.width} ratio={d.ratio:.2f}")

# %%
print(bounds_report(8).format_text())
