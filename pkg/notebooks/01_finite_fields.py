# %% [markdown]
# # Finite fields
#
# Elements of GF(p^e) are integers `0..q-1`: the base-p digits are the
# coefficients of a polynomial in `x`, constant term first.  Arithmetic
# goes through lookup tables, so whole numpy arrays can be added or
# multiplied at once.

# %%
import numpy as np

from paramcodes import GF

F = GF(9)
print(F, "modulus (constant term first):", F.modulus)

# %% [markdown]
# `x` is encoded as 3.  Its square is `-1`, i.e. 2.

# %%
x = F(3)
print("x^2 =", (x * x).value)
print("x^8 =", (x ** 8).value)

# %%
# the unit group is cyclic of order 8; list the order of each unit
units = np.arange(1, 9)
orders = [min(k for k in range(1, 9) if F.pow(int(u), k) == 1) for u in units]
print(dict(zip(units.tolist(), orders)))

# %% [markdown]
# Vectorized operations take arrays.

# %%
a = np.arange(9)
table = F.mul(a[:, None], a[None, :])
print(table)
assert np.all(F.mul(a[1:], F.inv(a[1:])) == 1)
