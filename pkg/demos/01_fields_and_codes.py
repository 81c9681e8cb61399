"""
Finite fields and Vandermonde convolutional codes
=================================================

Build GF(4), pick an element of order 3 and write down the rate 1/3 code
with memory 1 and 2.
"""

# %%
from mdsconv import GF, build_code, closed_form_entry, encode, find_element_of_order, weight
from mdsconv import DensePoly, singleton_bound

F = GF(4)
print(F, 'modulus', F.modulus)
print([repr(e) for e in F.elements()])

# %%
# an element of exact order 3; in GF(4) that is any primitive element
a = find_element_of_order(F, 3)
print('alpha =', a, ' alpha^3 =', a ** 3)

# %%
# delta = 1: every column is 1 + alpha^j z
code = build_code(F, 3, 1, a)
print(code.G)
print('generalized Singleton bound:', singleton_bound(3, 1, 1))

# %%
# with delta = n - 1 each entry also has a closed form as a geometric sum
code2 = build_code(F, 3, 2, a)
for j in range(3):
    print(j, code2.G[0, j], '==', closed_form_entry(code2, j))

# %%
# encode u = 1 + z + z^2 and count nonzero coefficients
u = DensePoly(F, [F.one, F.one, F.one])
v = encode(code, u)
print(v)
print('weight', weight(v))

# %%
# more memory, larger distance bound n(delta + 1)
for d in range(3):
    c = build_code(F, 3, d, a)
    print(d, 'bound', c.free_distance_bound)
