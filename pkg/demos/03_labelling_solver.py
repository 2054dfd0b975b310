# %% [markdown]
# # Searching for Diophantine labellings
#
# A graph on n vertices is Diophantine when its vertices can be labelled
# 1..n so that every edge's label gcd divides n. Equivalently, the graph
# embeds in D_n.

# %%
from diophantine import SearchConfig, generate, solve, verify
from diophantine.graphio import PETERSEN_FIGURE_LABELLING

petersen = generate("petersen")
print("hand labelling violations:", verify(petersen, PETERSEN_FIGURE_LABELLING))
result = solve(petersen)
print(result.verdict.value, result.labelling.assignment, result.stats)

# %% [markdown]
# K_5 fails: any two of 2 and 4 share gcd 2, which does not divide 5.

# %%
k5 = generate("complete", 5)
print(solve(k5).verdict.value)

# %% [markdown]
# ## Diophantine but not prime
#
# D_{p^k} is Diophantine by construction (the identity labelling works) but
# admits no prime labelling once k >= 2.

# %%
for n in (4, 8, 9, 16):
    g = generate("maximal_diophantine", n)
    dio = solve(g, SearchConfig(mode="dio"))
    prime = solve(g, SearchConfig(mode="prime"))
    print(f"D_{n}: dio={dio.verdict.value} prime={prime.verdict.value} decisions={prime.stats.decisions}")
