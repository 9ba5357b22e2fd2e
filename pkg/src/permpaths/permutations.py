"""
Permutations of {1..n} in one-line notation, and the statistics this library
is built on: left-to-right / right-to-left minima, the minima-reversal map f,
excedances, and 321-pattern predicates.

Conventions:
- A permutation is any sequence of the integers 1..n, each exactly once;
  functions accept any sequence and return plain tuples.
- Positions are 1-based everywhere a position is reported, matching the
  usual combinatorial convention.  The empty tuple is the (valid) empty
  permutation.
- Text form is space-separated values ("4 6 5 2 3 8 1 7"); commas are
  accepted on input.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Perm = tuple[int, ...]


class NotAPermutation(ValueError):
    """The given values are not a bijection on {1..n}."""


class EmptyPermutation(ValueError):
    """The operation needs at least one entry."""


def as_permutation(values: Iterable[int]) -> Perm:
    """
    Validate ``values`` as a permutation of {1..n} and return it as a tuple.

    >>> as_permutation([2, 1, 3])
    (2, 1, 3)
    >>> as_permutation([])
    ()
    """
    p = tuple(values)
    n = len(p)
    seen = set()
    for v in p:
        if not isinstance(v, int) or v < 1:
            raise NotAPermutation(f"entry {v!r} is not a positive integer")
        if v > n:
            raise NotAPermutation(f"entry {v} exceeds the length {n}")
        if v in seen:
            raise NotAPermutation(f"duplicate entry {v}")
        seen.add(v)
    return p


def parse_permutation(text: str) -> Perm:
    """
    Parse space- or comma-separated one-line notation.

    >>> parse_permutation("4 6 5 2 3 8 1 7")
    (4, 6, 5, 2, 3, 8, 1, 7)
    >>> parse_permutation("2,1")
    (2, 1)
    >>> parse_permutation("")
    ()
    """
    values = []
    for token in text.replace(",", " ").split():
        try:
            values.append(int(token))
        except ValueError:
            raise NotAPermutation(f"entry {token!r} is not an integer") from None
    return as_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """Canonical text form: space-separated values."""
    return " ".join(str(v) for v in p)


def left_to_right_minima(p: Sequence[int]) -> list[tuple[int, int]]:
    """
    The entries smaller than everything before them, as (position, value)
    pairs in position order.  The first entry always qualifies.

    >>> left_to_right_minima((4, 6, 5, 2, 3, 8, 1, 7))
    [(1, 4), (4, 2), (7, 1)]
    """
    out: list[tuple[int, int]] = []
    for i, v in enumerate(p, start=1):
        if not out or v < out[-1][1]:
            out.append((i, v))
    return out


def right_to_left_minima(p: Sequence[int]) -> list[tuple[int, int]]:
    """
    The entries smaller than everything after them, as (position, value)
    pairs.  Both coordinates increase along the list; the value 1 always
    appears when the permutation is nonempty.

    >>> right_to_left_minima((3, 2, 1))
    [(3, 1)]
    """
    out: list[tuple[int, int]] = []
    for i in range(len(p), 0, -1):
        v = p[i - 1]
        if not out or v < out[-1][1]:
            out.append((i, v))
    out.reverse()
    return out


def lr_decompose(p: Sequence[int]) -> tuple[Perm, ...]:
    """
    Split ``p`` immediately before each left-to-right minimum.

    Each block starts at a left-to-right minimum and at nothing else, so the
    block starters decrease and the last block starts with 1.

    >>> lr_decompose((4, 6, 5, 2, 3, 8, 1, 7))
    ((4, 6, 5), (2, 3, 8), (1, 7))
    """
    if not p:
        raise EmptyPermutation("cannot decompose the empty permutation")
    starts = [i for i, _ in left_to_right_minima(p)] + [len(p) + 1]
    return tuple(tuple(p[a - 1:b - 1]) for a, b in zip(starts, starts[1:]))


def f_map(p: Sequence[int]) -> Perm:
    """
    Reverse the minima decomposition of ``p`` and concatenate.

    The result always begins with 1, because the block holding the global
    minimum moves to the front.

    >>> f_map((4, 6, 5, 2, 3, 8, 1, 7))
    (1, 7, 2, 3, 8, 4, 6, 5)
    """
    out: list[int] = []
    for block in reversed(lr_decompose(p)):
        out.extend(block)
    return tuple(out)


def f_prime(p: Sequence[int]) -> Perm:
    """
    Drop the leading 1 of ``f_map(p)`` and decrement the remaining entries,
    giving a permutation one shorter.

    >>> f_prime((2, 1, 3))
    (2, 1)
    >>> f_prime((1,))
    ()
    """
    return tuple(v - 1 for v in f_map(p)[1:])


@dataclass(frozen=True)
class ExcedanceTable:
    """
    The excedances (value > position) and non-excedances (value <= position)
    of a permutation, each as parallel position/value rows in position order.

    For a nonempty permutation, position n is always a non-excedance location
    and 1 is always among the non-excedance values.
    """

    exc_positions: tuple[int, ...]
    exc_values: tuple[int, ...]
    nonexc_positions: tuple[int, ...]
    nonexc_values: tuple[int, ...]


def excedance_split(p: Sequence[int]) -> ExcedanceTable:
    """
    Partition the pairs (i, p(i)) into excedances and non-excedances.

    >>> excedance_split((2, 1, 3)).nonexc_positions
    (2, 3)
    """
    exc_p, exc_v, non_p, non_v = [], [], [], []
    for i, v in enumerate(p, start=1):
        if v > i:
            exc_p.append(i)
            exc_v.append(v)
        else:
            non_p.append(i)
            non_v.append(v)
    return ExcedanceTable(tuple(exc_p), tuple(exc_v), tuple(non_p), tuple(non_v))


def avoids_321(p: Sequence[int]) -> bool:
    """
    True iff ``p`` has no descending subsequence of length three.

    One pass, O(n), by value comparisons alone, so any sequence of distinct
    integers works — not only permutations of {1..n}.  Track the largest
    entry seen and the largest entry that already has something bigger
    before it; a new entry below the latter completes a descending triple.

    >>> avoids_321((1, 7, 2, 3, 8, 4, 6, 5))
    False
    >>> avoids_321((5, 4, 6))
    True
    >>> avoids_321(())
    True
    """
    largest = dominated = None
    for v in p:
        if dominated is not None and v < dominated:
            return False
        if largest is not None and v < largest:
            if dominated is None or v > dominated:
                dominated = v
        elif largest is None or v > largest:
            largest = v
    return True


def find_321_witness(
    p: Sequence[int],
) -> tuple[tuple[int, int, int], tuple[int, int, int]] | None:
    """
    Locate one descending triple in ``p``, or None if it avoids 321.

    Returns (positions, values).  Deterministic choice: for the leftmost
    middle entry that has a larger entry before it and a smaller one after,
    take the prefix maximum and the suffix minimum as the outer entries.
    """
    n = len(p)
    if n < 3:
        return None
    suffix_min = [0] * n  # index of the minimum of p[j+1:], filled right to left
    best = n - 1
    for j in range(n - 2, -1, -1):
        suffix_min[j] = best
        if p[j] < p[best]:
            best = j
    hi = 0  # index of the running prefix maximum
    for j in range(1, n - 1):
        if p[j - 1] > p[hi]:
            hi = j - 1
        lo = suffix_min[j]
        if p[hi] > p[j] > p[lo]:
            return (hi + 1, j + 1, lo + 1), (p[hi], p[j], p[lo])
    return None


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff some subsequence of ``p`` is order-isomorphic to ``pattern``.

    Deliberately the slow, exhaustive definition: every index subset is
    tried.  Serves as the oracle against which the fast predicates are
    checked; do not use it inside counting loops.

    >>> contains_pattern((1, 3, 2, 5, 4), (3, 2, 5, 4))
    True
    >>> contains_pattern((1, 2, 3), (3, 2, 1))
    False
    """
    k = len(pattern)
    if k > len(p):
        return False
    for idx in itertools.combinations(range(len(p)), k):
        if all(
            (p[idx[a]] < p[idx[b]]) == (pattern[a] < pattern[b])
            for a in range(k)
            for b in range(a + 1, k)
        ):
            return True
    return False


def is_class_member(p: Sequence[int]) -> bool:
    """
    True iff the reversed minima decomposition of ``p`` avoids 321, i.e.
    ``avoids_321(f_map(p))``.  This family is counted by the large Schroeder
    numbers but is not closed under pattern containment: (1,3,2,5,4) is a
    member while its pattern (3,2,5,4) is not.

    >>> is_class_member((1, 3, 2, 5, 4))
    True
    >>> is_class_member((3, 2, 5, 4))
    False
    """
    return avoids_321(f_map(p))
