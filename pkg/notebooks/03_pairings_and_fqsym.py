# %% [markdown]
# # Pairings, Gram matrices and permutations
#
# The first pairing sums over all bijections between two posets and
# records how each bijection treats the two orders. The second pairing only
# counts bijections that send high relations to increasing permutation
# positions, weighted by permutation length.

# %%
from planeposets import gram, gram_det, pair, parse_poset
from planeposets.fqsym import coproduct_q as fq_coproduct
from planeposets.fqsym import pair_q, shuffle_product, theta
from planeposets.qpoly import Q1, Q3, Q4

print(gram(2).to_text())
print()
print(gram(2, "second").to_text())

# %% [markdown]
# With q2 = 0 the first Gram matrix becomes anti-triangular in the
# lexicographic order, so its determinant is a power of q1.

# %%
g = gram(3, "first", (Q1, 0, Q3, Q4))
print(g.to_text())
for n in range(2, 5):
    print(n, gram_det(n, "first", {"q2": 0}))

# %% [markdown]
# Linear extensions send plane posets to permutations. The image of the
# second pairing is the permutation pairing
# `<s, t> = q1^{n(n-1)/2 - l(s)} q4^{l(s)}` when `t` is the inverse of `s`.

# %%
p, q = parse_poset("p:21"), parse_poset("p:231")
print(theta(p), "|", theta(q))
for a in (parse_poset("p:132"), parse_poset("p:321")):
    for b in (parse_poset("p:213"), parse_poset("p:321")):
        assert pair_q(theta(a), theta(b)) == pair(a, b, "second")
print(pair(parse_poset("p:321"), parse_poset("p:321"), "second"))

# %% [markdown]
# The shuffle product and the cut-and-standardize coproduct.

# %%
print(shuffle_product((1, 2, 3), (2, 1)))
print(fq_coproduct((4, 3, 1, 2, 5), 1, 1))
