# %% [markdown]
# # Plane posets as permutations
#
# A plane poset carries two orders: the "high" order `<_h` and the "right"
# order `<_r`. Every plane poset of size n arises from exactly one
# permutation sigma of 1..n:
#
# * `i <_h j` when `i < j` and `sigma(i) < sigma(j)`
# * `i <_r j` when `i < j` and `sigma(i) > sigma(j)`
#
# So there are n! of them, and the library stores each one by its permutation.

# %%
import numpy as np

from planeposets import enumerate_posets, format_poset, parse_poset
from planeposets.poset import concat, h_components, is_forest, is_wn, linear_extensions, over, transform

for n in range(7):
    print(n, len(enumerate_posets(n)))

# %% [markdown]
# The relation matrices are plain boolean numpy arrays. Here is the
# N-shaped poset `p:2413`.

# %%
n_shape = parse_poset("p:2413")
print(n_shape.h_matrix.astype(int))
print(n_shape.r_matrix.astype(int))
# every pair of distinct elements is comparable in exactly one of the two orders
both = n_shape.h_matrix | n_shape.h_matrix.T | n_shape.r_matrix | n_shape.r_matrix.T
assert (both == ~np.eye(4, dtype=bool)).all()

# %% [markdown]
# Two ways of gluing: `concat` puts posets side by side (everything on the
# left is `<_r` everything on the right), `over` stacks them (everything in
# the first is `<_h` everything in the second).

# %%
a, b = parse_poset("p:1"), parse_poset("p:12")
print(format_poset(concat(a, b)), format_poset(over(a, b)))
glued = concat(parse_poset("p:21"), parse_poset("p:12"))
print(format_poset(glued), [format_poset(c) for c in h_components(glued)])

# %% [markdown]
# The dihedral group of order 8 acts by reflecting the two orders.

# %%
p = parse_poset("p:132")
for g in ("iota", "alpha", "beta", "gamma"):
    print(g, format_poset(transform(p, g)))

# %% [markdown]
# Forests (no `p:213` pattern) are counted by the Catalan numbers, and 22 of
# the 24 posets of size 4 avoid both N shapes.

# %%
print([sum(map(is_forest, enumerate_posets(n))) for n in range(6)])
print(sum(map(is_wn, enumerate_posets(4))))
print(linear_extensions(parse_poset("p:21")))
