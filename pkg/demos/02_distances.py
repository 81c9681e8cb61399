"""
Free distance, row distances and the weight enumerator
======================================================
"""

# %%
import time

from mdsconv import GF, build_code, find_element_of_order
from mdsconv.distance import (
    StateGraph,
    brute_force_distance,
    default_degree_bound,
    extended_row_distances,
    free_distance,
    min_weight_census,
    slope_lower_bound,
    weight_enumerator,
)

F = GF(4)
a = find_element_of_order(F, 3)
code = build_code(F, 3, 2, a)

# %%
# the state graph has q^delta states
g = StateGraph(code)
print(g.num_states, 'states')
print('free distance', free_distance(code, g), 'bound', code.free_distance_bound)

# %%
# brute force over all messages of bounded degree agrees
bound = default_degree_bound(code)
print('brute force up to degree 6:', brute_force_distance(code, 6), '(default bound would be', bound, ')')

# %%
# row distances grow with slope 1 here and sit on the lower bound
rd = extended_row_distances(code, 10, g)
for j, d in rd.items():
    print(j, d, slope_lower_bound(code, j))

# %%
# enumerator terms: L^j -> {weight: count}
s = weight_enumerator(code, 6)
for j, w, c in s.rows():
    print(f'L^{j} W^{w}: {c}')

# %%
# minimum-weight codewords of length delta + 1 come in q - 1 scalar multiples
print(min_weight_census(code, code.delta + 1, g))

# %%
# a bigger instance: GF(8), alpha of order 7, n = 3
F8 = GF(8)
c8 = build_code(F8, 3, 2, find_element_of_order(F8, 7))
t0 = time.perf_counter()
s8 = weight_enumerator(c8, 14)
print([s8.leading(j) for j in range(6, 15)], f'{time.perf_counter() - t0:.3f}s')
