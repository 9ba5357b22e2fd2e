"""
The full pipeline: class permutations of {1..n+1} <-> Schroeder n-paths.

A permutation is in the class when reversing its minima blocks yields a
321-avoider.  Its path is built from the shadow permutation's Dyck path by
flattening the peaks that remember where the blocks began; that extra
marking is exactly what makes the map invertible.
"""
from permpaths import (
    NotInClass,
    format_permutation,
    phi,
    phi_inverse,
    phi_trace,
    render_ascii,
)

p = (5, 6, 2, 4, 1, 3)
trace = phi_trace(p)
print("input:           ", format_permutation(trace.input))
print("blocks:          ", " | ".join(format_permutation(b) for b in trace.blocks))
print("f:               ", format_permutation(trace.f))
print("f':              ", format_permutation(trace.f_prime))
print("code:            ", trace.code)
print("dyck:            ", trace.dyck)
print("designated peaks:", trace.designated_peaks)
print("schroeder:       ", trace.schroeder)
print()
print(render_ascii(trace.schroeder))
print()
print("round trip:", phi_inverse(phi(p)) == p)
print()

# not every permutation qualifies, and the failure names its witness
try:
    phi((4, 6, 5, 2, 3, 8, 1, 7))
except NotInClass as exc:
    print("rejected:", exc)

# membership is not hereditary: the class is no pattern class
print("1 3 2 5 4 ->", phi((1, 3, 2, 5, 4)))
try:
    phi((2, 1, 4, 3))  # the pattern of 3 2 5 4, as a genuine permutation
except NotInClass as exc:
    print("but its pattern is rejected:", exc)
