# %% [markdown]
# # Minimum distance of even cycle codes
#
# The closed form has two branches.  Which one applies depends on the
# sign of `delta(k, q)`.

# %%
from paramcodes import GF, code_from, cycle_graph, enumerate_points, minimum_distance
from paramcodes import formulas as fm

for k in range(2, 7):
    row = []
    for q in (3, 4, 5, 7):
        row.append(f"{fm.delta(k, q):>10d}")
    print(f"k={k}", *row)

# %% [markdown]
# Exhaustive search over all codewords agrees with the formula on small cases.

# %%
for k, q in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (5, 3)]:
    C = code_from(enumerate_points(cycle_graph(2 * k), GF(q)), 1)
    d = minimum_distance(C)
    print(f"C{2 * k} q={q}: [{C.length}, {C.dimension}, {d}] formula {fm.cycle_min_distance(k, q)}"
          f" ({fm.theorem_branch(k, q)})")

# %% [markdown]
# For the 4-cycle the minimum distance is the square of the one for the
# projective line's torus.

# %%
print([(q, fm.cycle_min_distance(2, q), fm.torus_min_distance(2, q, 1) ** 2) for q in (3, 4, 5, 7, 8, 9)])
