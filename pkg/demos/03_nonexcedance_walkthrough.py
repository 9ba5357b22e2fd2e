"""
From a 321-avoiding permutation to a Dyck path, one step at a time.

The non-excedances (entries at or below their position) of a 321-avoiding
permutation increase in both position and value, the last position is
always n, and the first value is always 1.  Dropping those two forced
entries and decrementing the values leaves precisely an ascent-descent
code — that is the whole bijection.
"""
from permpaths import (
    excedance_split,
    format_permutation,
    mdd_forward,
    mdd_inverse,
    peak_upstep_ordinals,
    render_ascii,
)

sigma = (1, 4, 5, 2, 6, 9, 3, 7, 11, 8, 10)
print("sigma:", format_permutation(sigma))

table = excedance_split(sigma)
print("non-excedance positions:", table.nonexc_positions)
print("non-excedance values:   ", table.nonexc_values)
print("drop last position / first value, decrement the values:")
print("  a =", table.nonexc_positions[:-1])
print("  b =", tuple(v - 1 for v in table.nonexc_values[1:]))
print()

path = mdd_forward(sigma)
print(render_ascii(path))
print()

print("peak ordinals:", peak_upstep_ordinals(path), "(= the positions above)")
print("inverse returns sigma:", mdd_inverse(path) == sigma)
