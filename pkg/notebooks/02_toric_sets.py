# %% [markdown]
# # Toric sets of graphs
#
# Each edge `{i, j}` of a graph gives a monomial `x_i x_j`.  Feeding every
# unit assignment of the vertices through these monomials and reading the
# result projectively gives the set X.

# %%
from paramcodes import GF, component_profile, cycle_graph, enumerate_points, expected_length
from paramcodes import parse_graph_spec

X = enumerate_points(cycle_graph(4), GF(3))
for pt, fib in zip(X.as_tuples(), X.fiber):
    print(pt, "hit", fib, "times")

# %% [markdown]
# For a connected bipartite graph every point has the same number of
# preimages, `(q-1)^2` for an even cycle.  The length of the code is then
# `(q-1)^(n-2)`.

# %%
for n in (4, 6, 8):
    for q in (3, 4, 5):
        X = enumerate_points(cycle_graph(n), GF(q))
        print(f"C{n} q={q}: |X|={X.m:5d} formula={expected_length(X.graph, GF(q)):5d}")

# %% [markdown]
# Odd cycles are not bipartite and fill the whole torus.

# %%
for spec in ("cycle:3", "cycle:5", "cycle:3+cycle:4", "cycle:4+path:1"):
    g = parse_graph_spec(spec)
    prof = component_profile(g)
    X = enumerate_points(g, GF(5))
    print(f"{spec:16s} b0={prof.b0} gamma={prof.gamma} |X|={X.m} formula={expected_length(g, GF(5))}")
