"""
Counting, exhaustive enumeration, unranking, and brute-force verification.

The large Schroeder numbers 1, 2, 6, 22, 90, 394, 1806, ... are computed by
the first-return recurrence; a second, independent route (a binomial sum
over Catalan numbers) exists so the two can be played against each other.

Exhaustive sweeps grow factorially or exponentially, so the enumerators
refuse absurd sizes by default: permutation sweeps stop at length 11 and
path enumerations at semilength 14.  Every cap can be raised explicitly by
callers who know what they are asking for.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .paths import LatticePath
from .permutations import Perm, is_class_member
from .schroeder import phi, phi_inverse

MAX_SWEEP_LENGTH = 11
MAX_PATH_SEMILENGTH = 14


class SizeGuard(ValueError):
    """An exhaustive sweep was asked for beyond the configured cap."""


def _guard(kind: str, size: int, cap: int, override: int | None) -> None:
    limit = cap if override is None else override
    if size > limit:
        raise SizeGuard(f"{kind} {size} exceeds the cap {limit}")


_schroeder: list[int] = [1]


def schroeder_number(n: int) -> int:
    """
    The number of Schroeder paths of semilength n, by the first-return
    recurrence r(n+1) = r(n) + sum(r(k) * r(n-k) for k in 0..n).

    >>> [schroeder_number(n) for n in range(7)]
    [1, 2, 6, 22, 90, 394, 1806]
    """
    if n < 0:
        raise ValueError(f"semilength {n} is negative")
    while len(_schroeder) <= n:
        m = len(_schroeder) - 1
        _schroeder.append(
            _schroeder[m]
            + sum(_schroeder[k] * _schroeder[m - k] for k in range(m + 1))
        )
    return _schroeder[n]


def schroeder_number_by_binomial_sum(n: int) -> int:
    """
    The same count by a closed sum: choose 2d slots forming a Dyck pattern
    of semilength d, fill the rest with flat-steps.  Kept deliberately
    separate from ``schroeder_number`` as a cross-check.
    """
    return sum(math.comb(n + d, 2 * d) * catalan_number(d) for d in range(n + 1))


def catalan_number(n: int) -> int:
    """
    >>> [catalan_number(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    return math.comb(2 * n, n) // (n + 1)


def enumerate_permutations(
    n: int, *, limit_override: int | None = None
) -> Iterator[Perm]:
    """All n! permutations of {1..n} in lexicographic order."""
    _guard("permutation length", n, MAX_SWEEP_LENGTH, limit_override)
    return iter(itertools.permutations(range(1, n + 1)))


def enumerate_321_avoiders(
    n: int, *, limit_override: int | None = None
) -> Iterator[Perm]:
    """
    The 321-avoiding permutations of {1..n}, lexicographically.  Prunes as
    it builds: a prefix dies as soon as it holds a descending pair whose
    smaller value still exceeds something unplaced... which is exactly when
    a new value sits below the largest already-dominated entry.

    >>> list(enumerate_321_avoiders(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]
    """
    _guard("permutation length", n, MAX_SWEEP_LENGTH, limit_override)

    def extend(
        prefix: list[int], free: list[int], prefix_max: int, dominated_max: int
    ) -> Iterator[Perm]:
        if not free:
            yield tuple(prefix)
            return
        for i, v in enumerate(free):
            if v < dominated_max:
                continue
            prefix.append(v)
            yield from extend(
                prefix,
                free[:i] + free[i + 1:],
                max(prefix_max, v),
                dominated_max if v > prefix_max else max(dominated_max, v),
            )
            prefix.pop()

    return extend([], list(range(1, n + 1)), 0, 0)


def enumerate_class_members(
    n: int, *, limit_override: int | None = None
) -> Iterator[Perm]:
    """The permutations of {1..n} in the bijection's domain, lex order."""
    return (
        p
        for p in enumerate_permutations(n, limit_override=limit_override)
        if is_class_member(p)
    )


def count_class_members(n: int, *, limit_override: int | None = None) -> int:
    """
    Brute-force count of domain permutations of {1..n}; equals the Schroeder
    number of index n-1.
    """
    return sum(1 for _ in enumerate_class_members(n, limit_override=limit_override))


def _paths(n: int, allow_flat: bool) -> Iterator[LatticePath]:
    # rem = horizontal units still to cover, h = current height; a step is
    # legal only if the walk can still get home.  U < D < F gives lex order.
    def walk(prefix: list[str], rem: int, h: int) -> Iterator[LatticePath]:
        if rem == 0:
            yield "".join(prefix)
            return
        if rem >= h + 2:
            prefix.append("U")
            yield from walk(prefix, rem - 1, h + 1)
            prefix.pop()
        if h >= 1:
            prefix.append("D")
            yield from walk(prefix, rem - 1, h - 1)
            prefix.pop()
        if allow_flat and rem >= h + 2:
            prefix.append("F")
            yield from walk(prefix, rem - 2, h)
            prefix.pop()

    return walk([], 2 * n, 0)


def enumerate_dyck(n: int, *, limit_override: int | None = None) -> Iterator[LatticePath]:
    """
    All Dyck paths of semilength n, lexicographic with U < D.

    >>> list(enumerate_dyck(2))
    ['UUDD', 'UDUD']
    """
    _guard("path semilength", n, MAX_PATH_SEMILENGTH, limit_override)
    return _paths(n, allow_flat=False)


def enumerate_schroeder(
    n: int, *, limit_override: int | None = None
) -> Iterator[LatticePath]:
    """
    All Schroeder paths of semilength n, lexicographic with U < D < F.

    >>> list(enumerate_schroeder(2))
    ['UUDD', 'UDUD', 'UDF', 'UFD', 'FUD', 'FF']
    """
    _guard("path semilength", n, MAX_PATH_SEMILENGTH, limit_override)
    return _paths(n, allow_flat=True)


_completions: dict[tuple[int, int], int] = {(0, 0): 1}


def _completion_count(rem: int, h: int) -> int:
    """Schroeder walks from height h covering rem horizontal units, home to 0."""
    try:
        return _completions[(rem, h)]
    except KeyError:
        total = 0
        if rem >= h + 2:
            total += _completion_count(rem - 1, h + 1)
        if h >= 1:
            total += _completion_count(rem - 1, h - 1)
        if rem >= h + 2:
            total += _completion_count(rem - 2, h)
        _completions[(rem, h)] = total
        return total


def unrank_schroeder(n: int, rank: int) -> LatticePath:
    """
    The Schroeder path of semilength n at 0-based ``rank`` in the order of
    ``enumerate_schroeder``, without enumerating.

    >>> unrank_schroeder(2, 0)
    'UUDD'
    >>> unrank_schroeder(2, 5)
    'FF'
    """
    total = schroeder_number(n)
    if not 0 <= rank < total:
        raise IndexError(f"rank {rank} outside [0, {total}) for semilength {n}")
    out: list[str] = []
    rem, h, r = 2 * n, 0, rank
    while rem:
        if rem >= h + 2:
            count = _completion_count(rem - 1, h + 1)
            if r < count:
                out.append("U")
                rem, h = rem - 1, h + 1
                continue
            r -= count
        if h >= 1:
            count = _completion_count(rem - 1, h - 1)
            if r < count:
                out.append("D")
                rem, h = rem - 1, h - 1
                continue
            r -= count
        out.append("F")
        rem -= 2
    return "".join(out)


@dataclass(frozen=True)
class VerificationRow:
    """Exhaustive evidence for one size."""

    n: int
    class_size: int
    expected: int
    distinct_images: int
    image_complete: bool
    round_trips: bool

    @property
    def ok(self) -> bool:
        return (
            self.class_size == self.expected
            and self.distinct_images == self.expected
            and self.image_complete
            and self.round_trips
        )


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[VerificationRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def verify_bijection(
    max_n: int, *, limit_override: int | None = None
) -> VerificationReport:
    """
    For every semilength n up to ``max_n``, sweep all permutations of
    {1..n+1}, map each domain member through the bijection, and check that
    the images are distinct valid Schroeder paths, that they exhaust the
    Schroeder set, that the inverse returns every member unchanged, and
    that the count matches the Schroeder number.
    """
    rows = []
    for n in range(max_n + 1):
        expected = schroeder_number(n)
        images = set()
        members = 0
        round_trips = True
        for p in enumerate_permutations(n + 1, limit_override=limit_override):
            if not is_class_member(p):
                continue
            members += 1
            path = phi(p)
            images.add(path)
            if phi_inverse(path) != p:
                round_trips = False
        complete = images == set(
            enumerate_schroeder(n, limit_override=limit_override)
        )
        rows.append(
            VerificationRow(
                n=n,
                class_size=members,
                expected=expected,
                distinct_images=len(images),
                image_complete=complete,
                round_trips=round_trips,
            )
        )
    return VerificationReport(tuple(rows))
