"""
The bijection between 321-avoiding permutations of {1..n} and Dyck paths of
semilength n that works through the non-excedance table.

Forward direction: list the non-excedances of the permutation as parallel
position and value rows.  The last position is always n and the first value
is always 1, so both can be dropped; decrementing the remaining values then
yields the ascent-descent code of a Dyck path.

The inverse rebuilds the permutation by placing the non-excedance values at
their positions and filling every other position with the unused values in
increasing order.

A structural fact the rest of the library leans on: the peaks of the
resulting path, read left to right, correspond one-to-one with the
non-excedances of the permutation, read left to right — the ordinal of a
peak's up-step among all up-steps equals the matching non-excedance's
position.
"""
from __future__ import annotations

from typing import Sequence

from .paths import (
    AscentDescentCode,
    LatticePath,
    ascent_descent_code,
    path_from_code,
    peak_upstep_ordinals,
)
from .permutations import (
    Perm,
    as_permutation,
    avoids_321,
    excedance_split,
    find_321_witness,
)


class Not321Avoiding(ValueError):
    """The permutation contains a descending triple."""

    def __init__(self, perm: Perm, positions: tuple[int, int, int], values: tuple[int, int, int]):
        self.permutation = perm
        self.witness_positions = positions
        self.witness_values = values
        super().__init__(
            "contains 321: values {} at positions {}".format(
                " ".join(map(str, values)), " ".join(map(str, positions))
            )
        )


def _require_avoider(p: Sequence[int]) -> Perm:
    perm = as_permutation(p)
    witness = find_321_witness(perm)
    if witness is not None:
        raise Not321Avoiding(perm, *witness)
    return perm


def mdd_forward(p: Sequence[int]) -> LatticePath:
    """
    Map a 321-avoiding permutation of {1..n} to a Dyck path of semilength n.

    >>> mdd_forward((1, 4, 5, 2, 6, 9, 3, 7, 11, 8, 10))
    'UDUUUDUUUDDDDUDUUDDUDD'
    >>> mdd_forward((2, 1))
    'UUDD'
    """
    perm = _require_avoider(p)
    table = excedance_split(perm)
    top = table.nonexc_positions[:-1]
    bottom = tuple(v - 1 for v in table.nonexc_values[1:])
    return path_from_code(AscentDescentCode(len(perm), top, bottom))


def mdd_inverse(path: LatticePath) -> Perm:
    """
    Rebuild the 321-avoiding permutation whose image is ``path``.

    >>> mdd_inverse("UUDD")
    (2, 1)
    >>> mdd_inverse("")
    ()
    """
    code = ascent_descent_code(path)
    n = code.n
    positions = code.top + ((n,) if n else ())
    values = ((1,) if n else ()) + tuple(b + 1 for b in code.bottom)
    out = [0] * n
    used = set()
    for pos, val in zip(positions, values):
        out[pos - 1] = val
        used.add(val)
    rest = iter(v for v in range(1, n + 1) if v not in used)
    for i in range(n):
        if not out[i]:
            out[i] = next(rest)
    return tuple(out)


def check_peak_correspondence(p: Sequence[int]) -> bool:
    """
    True iff the peaks of ``mdd_forward(p)`` line up with the non-excedances
    of ``p``: the k-th peak's up-step ordinal equals the k-th non-excedance
    position.
    """
    perm = _require_avoider(p)
    table = excedance_split(perm)
    return peak_upstep_ordinals(mdd_forward(perm)) == table.nonexc_positions
