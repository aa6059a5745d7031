# %% [markdown]
# # Evaluation codes
#
# `C_X(d)` evaluates the degree-d forms at the points of X.  With every
# point scaled so its first coordinate is 1, no further normalization is
# needed.

# %%
from paramcodes import (
    GF, code_from, cycle_graph, enumerate_points, hilbert_function, minimum_distance,
    regularity_index, weight_distribution,
)

X = enumerate_points(cycle_graph(6), GF(3))
C = code_from(X, 1)
print(f"[{C.length}, {C.dimension}, {minimum_distance(C)}]")
print(C.generator)

# %%
wd = weight_distribution(C)
print(wd)
assert sum(wd.values()) == 3 ** C.dimension

# %% [markdown]
# The Hilbert function grows with `d` until it reaches `|X|`.

# %%
print([hilbert_function(X, d) for d in range(4)], "regularity index", regularity_index(X))
