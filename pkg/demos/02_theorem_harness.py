# %% [markdown]
# # Exhaustive checks of the equal-degree results
#
# Every pair of labels in D_n, for every n up to a bound, is tested against
# each sufficient condition for equal degree. A counterexample would be a pair
# that meets the hypothesis yet has different degrees.

# %%
from diophantine.theorems import THEOREM_IDS, annotations, omega_converse_nonexample, omega_example, verify_all

results = verify_all(120)
for tid in THEOREM_IDS:
    verdicts = results[tid]
    print(f"{tid:24s} pairs={sum(v.pairs_checked for v in verdicts):8d} "
          f"counterexamples={sum(len(v.counterexamples) for v in verdicts)}")

# %% [markdown]
# The worked pair (14, 16) in D_20 meets the hypothesis; (10, 14) in D_23
# does not, even though their degrees agree.

# %%
print(omega_example())
print(omega_converse_nonexample())

# %%
for note in annotations(23):
    print("note:", note)

# %% [markdown]
# ## Supporting lemmas

# %%
from diophantine import lemmas

for r in lemmas.run_all(limit=150, bracket_n_max=150, sqrt_limit=10**5):
    print(f"{r.name:28s} checked={r.checked} ok={r.ok}")
