# %% [markdown]
# # Counting edges of the maximal Diophantine graph
#
# Labels a, b in 1..n are adjacent in D_n when gcd(a, b) divides n.
# They fail to be adjacent exactly when some critical prime power
# p^(v_p(n)+1) divides both, so the edge count is an inclusion-exclusion
# over products of critical powers.

# %%
from diophantine import D, R, degree_classes, edge_count_bruteforce, edge_count_formula
from diophantine.numtheory import reduced_label

for n in (4, 5, 6, 7, 8, 20):
    print(f"D_{n}: {edge_count_formula(D(n))} edges (brute force {edge_count_bruteforce(D(n))})")

# %% [markdown]
# Critical powers of D_20: 2 appears twice in 20, so 8 is the first power
# of 2 that can separate two labels.

# %%
print({c.prime: c.power for c in D(20).critical_powers})

# %% [markdown]
# The formula stays cheap long after the pairwise scan becomes hopeless.

# %%
import time

t = time.perf_counter()
print(edge_count_formula(D(10**7)), f"in {time.perf_counter() - t:.2f}s")

# %% [markdown]
# ## Degrees
#
# A label's degree depends only on the primes of its reduced label a/gcd(a, n).
# In D_20 the labels 14 and 16 share degree 18.

# %%
report = degree_classes(D(20))
for deg, labels in report.classes.items():
    print(deg, labels)
print("reduced labels:", {a: reduced_label(a, 20) for a in (14, 16)})
print("full degree:", report.full_degree_labels)

# %% [markdown]
# The prime graph R_n only loses edges relative to D_n, and the two coincide
# exactly when n is prime.

# %%
for n in (7, 8, 11, 12):
    print(n, edge_count_formula(D(n)), edge_count_formula(R(n)))
