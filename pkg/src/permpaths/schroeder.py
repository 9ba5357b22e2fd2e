"""
The bijection between permutations of {1..n+1} whose reversed-block image
avoids 321 and Schroeder paths of semilength n.

A permutation p belongs to the domain exactly when ``f_map(p)`` (reverse the
left-to-right-minima blocks, concatenate) avoids 321.  The forward map:

1. pass to ``f_prime(p)`` — drop the leading 1 of f_map(p), decrement —
   giving a 321-avoiding permutation of {1..n};
2. send that through the non-excedance bijection to a Dyck path;
3. flatten the peaks that correspond to p's block structure: block-starting
   values other than 1, decremented, are non-excedance values of f_prime(p),
   and the k-th peak of the path matches the k-th non-excedance.

Each step is reversible, so the whole map is; ``phi_inverse`` runs it
backwards.  ``phi_trace`` exposes every intermediate.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .mdd import mdd_forward, mdd_inverse
from .paths import (
    LatticePath,
    ascent_descent_code,
    flatten_peaks,
    parse_path,
    unflatten,
)
from .permutations import (
    Perm,
    as_permutation,
    excedance_split,
    f_map,
    f_prime,
    find_321_witness,
    format_permutation,
    left_to_right_minima,
    lr_decompose,
)


class NotInClass(ValueError):
    """
    The permutation's reversed-block image contains 321, so it lies outside
    the domain of the bijection.  Carries the image and one offending triple.
    """

    def __init__(
        self,
        permutation: Perm,
        f_image: Perm,
        witness_positions: tuple[int, int, int],
        witness_values: tuple[int, int, int],
    ):
        self.permutation = permutation
        self.f_image = f_image
        self.witness_positions = witness_positions
        self.witness_values = witness_values
        super().__init__(
            "f({}) = {} contains 321: values {} at positions {}".format(
                format_permutation(permutation),
                format_permutation(f_image),
                " ".join(map(str, witness_values)),
                " ".join(map(str, witness_positions)),
            )
        )


@dataclass(frozen=True)
class BijectionTrace:
    """Every intermediate object on the way from permutation to path."""

    input: Perm
    lr_minima: tuple[tuple[int, int], ...]
    blocks: tuple[Perm, ...]
    f: Perm
    f_prime: Perm
    nonexcedances: tuple[tuple[int, ...], tuple[int, ...]]
    code: str
    dyck: LatticePath
    designated_peaks: tuple[int, ...]
    schroeder: LatticePath


def _domain_check(p: Sequence[int]) -> tuple[Perm, Perm]:
    perm = as_permutation(p)
    image = f_map(perm)
    witness = find_321_witness(image)
    if witness is not None:
        raise NotInClass(perm, image, *witness)
    return perm, image


def _designated_peaks(perm: Perm, sigma: Perm) -> tuple[int, ...]:
    """
    Peak numbers to flatten: block starters of ``perm`` other than 1 are,
    after decrementing, non-excedance values of ``sigma``; the k-th peak of
    the Dyck path corresponds to the k-th non-excedance.
    """
    marked = {value - 1 for _, value in left_to_right_minima(perm) if value != 1}
    nonexc_values = excedance_split(sigma).nonexc_values
    return tuple(
        k for k, value in enumerate(nonexc_values, start=1) if value in marked
    )


def phi(p: Sequence[int]) -> LatticePath:
    """
    Map a permutation of {1..n+1} in the class to a Schroeder path of
    semilength n.

    >>> phi((2, 1, 3))
    'UFD'
    >>> phi((3, 2, 1))
    'FF'
    >>> phi((1, 2, 3))
    'UDUD'
    >>> phi((1,))
    ''
    """
    perm, _ = _domain_check(p)
    sigma = f_prime(perm)
    dyck = mdd_forward(sigma)
    return flatten_peaks(dyck, _designated_peaks(perm, sigma))


def phi_inverse(path: LatticePath) -> Perm:
    """
    Rebuild the class permutation mapping to ``path``.

    >>> phi_inverse("UFD")
    (2, 1, 3)
    >>> phi_inverse("")
    (1,)
    """
    schroeder = parse_path(path)
    dyck, flat = unflatten(schroeder)
    sigma = mdd_inverse(dyck)
    nonexc_values = excedance_split(sigma).nonexc_values
    marked = {nonexc_values[k - 1] for k in flat}
    f_image = (1,) + tuple(v + 1 for v in sigma)
    starters = {1} | {v + 1 for v in marked}
    blocks: list[list[int]] = []
    for v in f_image:
        if v in starters:
            blocks.append([])
        blocks[-1].append(v)
    out: list[int] = []
    for block in reversed(blocks):
        out.extend(block)
    return tuple(out)


def phi_trace(p: Sequence[int]) -> BijectionTrace:
    """
    Run the forward map and keep every intermediate.

    >>> phi_trace((2, 1, 3)).designated_peaks
    (1,)
    """
    perm, image = _domain_check(p)
    sigma = f_prime(perm)
    table = excedance_split(sigma)
    dyck = mdd_forward(sigma)
    peaks = _designated_peaks(perm, sigma)
    return BijectionTrace(
        input=perm,
        lr_minima=tuple(left_to_right_minima(perm)),
        blocks=lr_decompose(perm),
        f=image,
        f_prime=sigma,
        nonexcedances=(table.nonexc_positions, table.nonexc_values),
        code=ascent_descent_code(dyck).to_text(),
        dyck=dyck,
        designated_peaks=peaks,
        schroeder=flatten_peaks(dyck, peaks),
    )
