# %% [markdown]
# # A survey of D_n
#
# One row per order: edge count, number of full-degree labels, the
# classical prime-labelling bound pi(n) + pi(n/2) + 1, and whether D_n equals R_n.

# %%
from diophantine.cli import survey_row

print("n    edges  full  bound  D=R")
for n in range(2, 41):
    row = survey_row(n)
    print(f"{row.n:<4} {row.edges_formula:<6} {row.full_degree_count:<5} {row.sy_bound:<6} {row.dn_eq_rn}")

# %% [markdown]
# Larger sweeps are easier from the command line:
#
#     diophantine survey --from 2 --to 5000 --brute-upto 500 --out survey.csv --jobs 4
