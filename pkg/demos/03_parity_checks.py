"""
Parity-check matrices
=====================

When alpha has order exactly n there are explicit polynomial parity checks.
"""

# %%
from mdsconv import GF, build_code, find_element_of_order
from mdsconv.parity import build_H_full, build_H_general, build_H_min, verify_parity_pair
from mdsconv.polyalg import is_minimal_basis

F = GF(7)
n = 3
a = find_element_of_order(F, n)
G = build_code(F, n, n - 1, a).G

# %%
Hf = build_H_full(F, n, a)
Hm = build_H_min(F, n, a)
print(Hf)
print(Hm)

# %%
# both annihilate G and are right invertible; only the second is a minimal basis
for name, H in (('full', Hf), ('min', Hm)):
    print(name, verify_parity_pair(G, H).to_json(), 'minimal:', is_minimal_basis(H))

# %%
# smaller delta: the general construction
for d in range(n):
    H = build_H_general(F, n, d, a)
    print(d, verify_parity_pair(build_code(F, n, d, a).G, H).certified)

# %%
# with ord(alpha) > n the construction does not apply
big = find_element_of_order(F, 6)
Hbad = build_H_full(F, n, big, force=True)
print(verify_parity_pair(build_code(F, n, n - 1, big).G, Hbad).to_json())
