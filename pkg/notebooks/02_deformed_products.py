# %% [markdown]
# # The four-parameter product and coproduct
#
# For posets P and Q, the product `m_q(P ⊗ Q)` sums over every poset R
# with a subset I such that R restricted to the complement of I is P and R
# restricted to I is Q. Each gluing is weighted by how the two parts
# relate across the cut:
#
# `q1^{h(out->in)} q2^{h(in->out)} q3^{r(out->in)} q4^{r(in->out)}`
#
# The coproduct uses the same weights, summed over all subsets of one poset.

# %%
from planeposets import coproduct_q, parse_poset, product_q
from planeposets.algebra import braid, reduced_coproduct, tensor_map
from planeposets.oracles import naive_product

x, y = parse_poset("p:1"), parse_poset("p:12")
print(product_q(x, x))
print(product_q(x, y))

# %% [markdown]
# The fast path reads a cached table of splits. The slow oracle scans
# every candidate R and subset directly; both must agree.

# %%
assert product_q(y, x) == naive_product(y, x)
print(reduced_coproduct(parse_poset("p:231")))

# %% [markdown]
# Associativity and coassociativity hold for all parameter values at once,
# since everything stays symbolic in q1..q4.

# %%
z = parse_poset("p:21")
assert product_q(product_q(x, y), z) == product_q(x, product_q(y, z))
cop = coproduct_q(parse_poset("p:312"))
assert tensor_map(cop, coproduct_q, None) == tensor_map(cop, None, coproduct_q)

# %% [markdown]
# Specializing the parameters recovers the undeformed products:
# `(1,0,0,0)` gives the over product and `(0,0,1,0)` gives concatenation.

# %%
print(product_q(x, y, (1, 0, 0, 0)))
print(product_q(x, y, (0, 0, 1, 0)))

# %% [markdown]
# The braiding `c(P ⊗ Q) = q4^{|P||Q|} Q ⊗ P` makes the algebra a braided
# bialgebra.

# %%
print(braid(reduced_coproduct(y)))
