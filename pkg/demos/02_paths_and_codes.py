"""
Lattice paths, their ASCII pictures, and the ascent-descent code.

A Dyck path is pinned down by two short integer sequences: the partial sums
of its ascent run lengths and of its descent run lengths, each without the
final total.  Flat-steps turn Dyck paths into Schroeder paths; flattening a
peak and re-inflating it are inverse moves.
"""
from permpaths import (
    AscentDescentCode,
    ascent_descent_code,
    flatten_peaks,
    parse_path,
    path_from_code,
    peak_upstep_ordinals,
    render_ascii,
    unflatten,
)

dyck = parse_path("UDUUUDUUUDDDDUDUUDDUDD")
print(render_ascii(dyck))
print()

code = ascent_descent_code(dyck)
print("code:", code.to_text())
print("round trip ok:", path_from_code(code) == dyck)
print("peak up-step ordinals:", peak_upstep_ordinals(dyck))
print()

# flatten two of the six peaks, then undo it
flat = flatten_peaks(dyck, [2, 5])
print(render_ascii(flat))
restored, which = unflatten(flat)
print("restored:", restored == dyck, "| flattened peaks were:", which)
print()

# codes are a tight interface: malformed ones are rejected with a reason
try:
    AscentDescentCode(4, (1, 3), (2,))
except ValueError as exc:
    print("rejected:", exc)
