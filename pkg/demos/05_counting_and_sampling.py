"""
Counting, enumeration, unranking, and uniform random sampling.

The class sizes are the large Schroeder numbers, computed by a convolution
recurrence and cross-checked by an unrelated binomial sum.  Unranking walks
a completion-count table, so single paths of absurd sizes are cheap even
though enumerating them is hopeless.
"""
import random

from permpaths import (
    enumerate_schroeder,
    format_permutation,
    phi_inverse,
    schroeder_number,
    schroeder_number_by_binomial_sum,
    unrank_schroeder,
    verify_bijection,
)

print("first Schroeder numbers:", [schroeder_number(n) for n in range(9)])
print(
    "two independent routes at n=40 agree:",
    schroeder_number(40) == schroeder_number_by_binomial_sum(40),
)
print("r(40) =", schroeder_number(40))
print()

print("all semilength-2 paths, enumeration order:", list(enumerate_schroeder(2)))
print("unrank picks them out directly:", [unrank_schroeder(2, r) for r in range(6)])
print()

rng = random.Random(2024)
print("three uniform samples at n=12, with their permutations:")
for _ in range(3):
    path = unrank_schroeder(12, rng.randrange(schroeder_number(12)))
    print(" ", path, "->", format_permutation(phi_inverse(path)))
print()

report = verify_bijection(5)
for row in report.rows:
    print(
        f"n={row.n}: {row.class_size} members, {row.distinct_images} images, "
        f"complete={row.image_complete}, round_trips={row.round_trips}"
    )
print("everything verified:", report.ok)
