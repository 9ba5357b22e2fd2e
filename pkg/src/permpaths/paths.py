"""
Lattice paths from (0,0) to (2n,0) built from up-steps U=(1,1), down-steps
D=(1,-1), and flat-steps F=(2,0), never dipping below the x-axis.

Paths with flat-steps allowed are Schroeder paths; paths without them are
Dyck paths.  ``n`` (the semilength) is the number of U steps plus the number
of F steps.  A path is stored as its step string, e.g. "UUDD" or "UFD".

A nonempty Dyck path factors uniquely as maximal ascent runs alternating
with maximal descent runs.  Recording the partial sums of the run lengths,
all but the final total, gives the ascent-descent code: two strictly
increasing integer sequences of equal length.  The code has a one-line text
form, ``n=4; a=1,3; b=1,2``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

UP, DOWN, FLAT = "U", "D", "F"

LatticePath = str


class InvalidPath(ValueError):
    """Base for step-string rejections."""


class InvalidCharacter(InvalidPath):
    """A character other than U, D, F."""


class NegativeExcursion(InvalidPath):
    """The walk dips below the x-axis."""


class UnbalancedPath(InvalidPath):
    """The walk does not return to height zero."""


class HasFlatsteps(InvalidPath):
    """A Dyck path was required but the path contains F steps."""


class InvalidCode(ValueError):
    """The two sequences do not describe a Dyck path."""


class NotAPeak(ValueError):
    """A designated peak number does not name a peak."""


def parse_path(text: str) -> LatticePath:
    """
    Validate a step string and return its canonical (uppercase, unspaced)
    form.  Lowercase letters and internal whitespace are tolerated.

    >>> parse_path("u f d")
    'UFD'
    >>> parse_path("UDD")
    Traceback (most recent call last):
        ...
    permpaths.paths.NegativeExcursion: height -1 after step 3
    """
    steps = []
    height = 0
    for ch in text:
        if ch.isspace():
            continue
        c = ch.upper()
        if c == UP:
            height += 1
        elif c == DOWN:
            height -= 1
        elif c != FLAT:
            raise InvalidCharacter(f"step {ch!r} is not one of U, D, F")
        steps.append(c)
        if height < 0:
            raise NegativeExcursion(f"height -1 after step {len(steps)}")
    if height != 0:
        raise UnbalancedPath(f"ends at height {height}, not 0")
    return "".join(steps)


def semilength(path: LatticePath) -> int:
    """Half the x-extent: the number of U steps plus the number of F steps."""
    return path.count(UP) + path.count(FLAT)


def heights(path: LatticePath) -> list[int]:
    """The height after each step (length = number of steps)."""
    out = []
    h = 0
    for c in path:
        if c == UP:
            h += 1
        elif c == DOWN:
            h -= 1
        out.append(h)
    return out


@dataclass(frozen=True)
class AscentDescentCode:
    """
    Partial sums of the ascent and descent run lengths of a Dyck path of
    semilength ``n``, each omitting the final total (which is always n).

    Valid exactly when both rows are strictly increasing within 1..n-1,
    have a common length, and satisfy bottom[i] <= top[i] (the walk must
    not go under the axis).
    """

    n: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if self.n < 0:
            raise InvalidCode(f"semilength {self.n} is negative")
        if len(self.top) != len(self.bottom):
            raise InvalidCode(
                f"row lengths differ: {len(self.top)} vs {len(self.bottom)}"
            )
        for name, row in (("a", self.top), ("b", self.bottom)):
            prev = 0
            for i, value in enumerate(row, start=1):
                if value <= prev:
                    raise InvalidCode(f"{name}[{i}] = {value} does not increase")
                prev = value
            if row and row[-1] >= self.n:
                raise InvalidCode(f"{name}[{len(row)}] = {row[-1]} reaches n = {self.n}")
        for i, (a, b) in enumerate(zip(self.top, self.bottom), start=1):
            if b > a:
                raise InvalidCode(f"b[{i}] = {b} exceeds a[{i}] = {a}")

    def to_text(self) -> str:
        """
        One-line form, e.g. ``n=4; a=1,3; b=1,2``.

        >>> AscentDescentCode(2, (1,), (1,)).to_text()
        'n=2; a=1; b=1'
        """
        a = ",".join(str(v) for v in self.top)
        b = ",".join(str(v) for v in self.bottom)
        return f"n={self.n}; a={a}; b={b}"

    @classmethod
    def from_text(cls, text: str) -> "AscentDescentCode":
        """Parse the ``to_text`` form (whitespace around separators is free)."""
        m = re.fullmatch(
            r"\s*n\s*=\s*(\d+)\s*;\s*a\s*=\s*([\d,\s]*);\s*b\s*=\s*([\d,\s]*)\s*",
            text,
        )
        if m is None:
            raise InvalidCode(f"cannot parse code text {text!r}")
        n = int(m.group(1))
        rows = []
        for group in (m.group(2), m.group(3)):
            tokens = [t for t in group.replace(",", " ").split()]
            rows.append(tuple(int(t) for t in tokens))
        return cls(n, rows[0], rows[1])


def ascent_descent_code(path: LatticePath) -> AscentDescentCode:
    """
    The code of a Dyck path.

    >>> ascent_descent_code("UDUUUDUUUDDDDUDUUDDUDD").to_text()
    'n=11; a=1,4,7,8,10; b=1,2,6,7,9'
    >>> ascent_descent_code("UUDD")
    AscentDescentCode(n=2, top=(), bottom=())
    """
    if FLAT in path:
        raise HasFlatsteps("ascent-descent codes are defined for Dyck paths only")
    ups = downs = 0
    a_sums, b_sums = [], []
    for prev, cur in zip(path, path[1:]):
        if prev == UP:
            ups += 1
            if cur == DOWN:
                a_sums.append(ups)
        else:
            downs += 1
            if cur == UP:
                b_sums.append(downs)
    # every ascent run ends U->D, so a_sums holds all the partial sums
    # including the final total n, which the code omits; the last descent
    # run ends the path, so b_sums already stops one short.
    return AscentDescentCode(semilength(path), tuple(a_sums[:-1]), tuple(b_sums))


def path_from_code(code: AscentDescentCode) -> LatticePath:
    """
    Rebuild the unique Dyck path with the given code.  Inverse of
    ``ascent_descent_code``.

    >>> path_from_code(AscentDescentCode(2, (1,), (1,)))
    'UDUD'
    """
    a = list(code.top) + ([code.n] if code.n else [])
    b = list(code.bottom) + ([code.n] if code.n else [])
    pieces = []
    prev_a = prev_b = 0
    for ai, bi in zip(a, b):
        pieces.append(UP * (ai - prev_a) + DOWN * (bi - prev_b))
        prev_a, prev_b = ai, bi
    return "".join(pieces)


def peak_upstep_ordinals(path: LatticePath) -> tuple[int, ...]:
    """
    For each peak (a U immediately followed by a D), the 1-based ordinal of
    its U among all U steps of the path, left to right.

    >>> peak_upstep_ordinals("UUDD")
    (2,)
    >>> peak_upstep_ordinals("UDUUUDUUUDDDDUDUUDDUDD")
    (1, 4, 7, 8, 10, 11)
    """
    out = []
    ordinal = 0
    for i, c in enumerate(path):
        if c == UP:
            ordinal += 1
            if i + 1 < len(path) and path[i + 1] == DOWN:
                out.append(ordinal)
    return tuple(out)


def peak_start_indices(path: LatticePath) -> list[int]:
    """0-based string indices of the U of each peak, left to right."""
    return [
        i
        for i in range(len(path) - 1)
        if path[i] == UP and path[i + 1] == DOWN
    ]


def flatten_peaks(path: LatticePath, peaks: Iterable[int]) -> LatticePath:
    """
    Replace the designated peaks' UD pairs by F steps.  Peaks are named by
    their 1-based left-to-right number among all peaks of ``path``.

    >>> flatten_peaks("UDUD", [1, 2])
    'FF'
    >>> flatten_peaks("UUDD", [1])
    'UFD'
    """
    starts = peak_start_indices(path)
    chosen = set()
    for j in peaks:
        if not 1 <= j <= len(starts):
            raise NotAPeak(f"path has {len(starts)} peaks, no peak {j}")
        chosen.add(starts[j - 1])
    out = []
    i = 0
    while i < len(path):
        if i in chosen:
            out.append(FLAT)
            i += 2
        else:
            out.append(path[i])
            i += 1
    return "".join(out)


def unflatten(path: LatticePath) -> tuple[LatticePath, tuple[int, ...]]:
    """
    Replace every F by a UD peak.  Returns the resulting Dyck path together
    with the left-to-right peak numbers of the peaks so created, which is
    exactly the data ``flatten_peaks`` needs to reverse the move.

    >>> unflatten("UFD")
    ('UUDD', (1,))
    >>> unflatten("FUDF")
    ('UDUDUD', (1, 3))
    """
    out = []
    created = set()
    for c in path:
        if c == FLAT:
            created.add(len(out))
            out.append(UP)
            out.append(DOWN)
        else:
            out.append(c)
    dyck = "".join(out)
    numbers = tuple(
        j
        for j, start in enumerate(peak_start_indices(dyck), start=1)
        if start in created
    )
    return dyck, numbers


def render_ascii(path: LatticePath) -> str:
    r"""
    Draw the path with /, \ and __, one text row per unit of height, and the
    step string as the final line.

    >>> print(render_ascii("UUDDUFD"))
     /\  __
    /  \/  \
    UUDDUFD
    """
    if not path:
        return ""
    rows: dict[int, dict[int, str]] = {}

    def put(band: int, col: int, ch: str) -> None:
        rows.setdefault(band, {})[col] = ch

    x = h = 0
    for c in path:
        if c == UP:
            put(h + 1, x, "/")
            h += 1
            x += 1
        elif c == DOWN:
            put(h, x, "\\")
            h -= 1
            x += 1
        else:
            put(h + 1, x, "_")
            put(h + 1, x + 1, "_")
            x += 2
    lines = []
    for band in range(max(rows), 0, -1):
        cells = rows.get(band, {})
        width = max(cells) + 1 if cells else 0
        lines.append("".join(cells.get(i, " ") for i in range(width)).rstrip())
    lines.append(path)
    return "\n".join(lines)
