"""
Left-to-right minima, block decomposition, and the reversal map.

A permutation splits just before each left-to-right minimum; reversing the
block list and concatenating gives a permutation that starts with 1.  The
one-shorter shadow (drop the 1, decrement) is what the path bijection
actually consumes.
"""
from permpaths import (
    f_map,
    f_prime,
    format_permutation,
    left_to_right_minima,
    lr_decompose,
    right_to_left_minima,
)

p = (4, 6, 5, 2, 3, 8, 1, 7)

print("permutation:   ", format_permutation(p))
print("lr minima:     ", left_to_right_minima(p))
print("rl minima:     ", right_to_left_minima(p))
print("blocks:        ", " | ".join(format_permutation(b) for b in lr_decompose(p)))
print("f (reversed):  ", format_permutation(f_map(p)))
print("f' (shadow):   ", format_permutation(f_prime(p)))
print()

# the reversal throws information away: both orders of 1 2 collapse
print("f(1 2) =", format_permutation(f_map((1, 2))))
print("f(2 1) =", format_permutation(f_map((2, 1))))
print("so f alone cannot be inverted; the designated peaks later fix that")
