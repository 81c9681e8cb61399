"""
Skew-cyclic structure
=====================

Identify F^n with A = F[x]/(x^n - 1) and the code with a left ideal of a
skew polynomial ring A[z; sigma].
"""

# %%
from mdsconv import GF, build_code, find_element_of_order
from mdsconv.skewcyclic import (
    SkewPoly,
    build_ring,
    cyclicity_decision,
    idempotent_form,
    multiplication_automorphism,
    p_map,
    reed_solomon_form,
    sigma_on_idempotents,
    skew_mul,
    unit_factorization,
)

F = GF(4)
n = 3
a = find_element_of_order(F, n)
R = build_ring(F, n)
print(R.factors)

# %%
# primitive idempotents of A, one per linear factor x - alpha^i
eps = R.linear_idempotents(a)
for e in eps:
    print(e, '| e*e == e:', e * e == e)

# %%
# x -> alpha x permutes them cyclically
s = multiplication_automorphism(R, a)
print(sigma_on_idempotents(s, eps))

# %%
code = build_code(F, n, 2, a)
g = p_map(code.G, s)
print('g =', g)
print('Reed-Solomon form matches:', reed_solomon_form(code, s) == g)
print('idempotent form matches:', idempotent_form(code, s) == g)

# %%
# g = eps_0 * u with u a unit of the skew ring
u, ui = unit_factorization(R, s, code.delta)
print(skew_mul(u, ui) == SkewPoly.one(s), skew_mul(SkewPoly.const(s, eps[0]), u) == g)

# %%
# decision versus exhaustive search over all automorphisms
print(cyclicity_decision(code).to_json())

# %%
# ord(alpha) = 7 > n = 3: predicted not skew-cyclic, and the search agrees
F8 = GF(8)
c8 = build_code(F8, 3, 1, find_element_of_order(F8, 7))
print(cyclicity_decision(c8, exhaustive=True).to_json())
