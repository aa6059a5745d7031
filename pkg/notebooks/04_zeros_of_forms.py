# %% [markdown]
# # Zeros of linear forms
#
# A codeword's weight is `|X|` minus the number of zeros of the form, so
# the minimum distance comes from the form with the most zeros.  Forms
# split into incomplete ones (some coefficient zero) and complete ones.

# %%
from paramcodes import GF, cycle_graph, enumerate_points, max_zeros_search, pullback, z_count, zeros_on_X
from paramcodes import formulas as fm
from paramcodes.zeros import Polynomial

q, k = 3, 2
F, g = GF(q), cycle_graph(2 * k)
X = enumerate_points(g, F)

form = Polynomial.linear([1, F.neg(1), 0, 0], F)
f = pullback(form, g)
print("pullback of t1 - t2:", f)
print("zeros on X:", zeros_on_X(form, X), "zeros on the torus:", z_count([f], g.n, F))

# %% [markdown]
# Each point of X has `(q-1)^2` preimages, which ties the two counts together.

# %%
for support in ("incomplete", "complete"):
    res = max_zeros_search(X, support)
    print(support, res.max, len(res.maximizers), "maximizers")
print("formulas:", fm.incomplete_max(k, q), fm.complete_max(k, q))

# %%
res = max_zeros_search(X, "complete")
print([a for a in res.maximizers if fm.equality_condition(a, F)] == list(res.maximizers))
