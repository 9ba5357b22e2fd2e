"""
Acceptance sweep: nine exhaustive, exact checks that together establish the
library's central claims at desk scale.  Every comparison is equality on
integers, tuples, or strings — tolerance zero.  Each test prints a one-line
summary; run this file directly for a plain PASS/FAIL report.
"""
from __future__ import annotations

import itertools

from permpaths.counting import (
    catalan_number,
    count_class_members,
    enumerate_321_avoiders,
    enumerate_dyck,
    enumerate_schroeder,
    schroeder_number,
    schroeder_number_by_binomial_sum,
)
from permpaths.mdd import check_peak_correspondence, mdd_forward, mdd_inverse
from permpaths.paths import (
    AscentDescentCode,
    InvalidCode,
    ascent_descent_code,
    path_from_code,
)
from permpaths.permutations import (
    avoids_321,
    contains_pattern,
    excedance_split,
    f_map,
    is_class_member,
    right_to_left_minima,
)
from permpaths.schroeder import phi, phi_inverse

WORKED_PERM = (1, 4, 5, 2, 6, 9, 3, 7, 11, 8, 10)
WORKED_PATH = "UDUUUDUUUDDDDUDUUDDUDD"
SCHROEDER_REFERENCE = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718]


def criterion_class_counts() -> str:
    """Domain size for {1..n+1} equals the n-th Schroeder number, n = 0..8."""
    got = [count_class_members(n + 1) for n in range(9)]
    want = SCHROEDER_REFERENCE[:9]
    assert got == want, f"counts {got} != {want}"
    assert want == [schroeder_number(n) for n in range(9)]
    return f"class sizes for lengths 1..9 = {got}, all equal to Schroeder numbers"


def criterion_bijectivity() -> str:
    """phi is a bijection onto Schroeder n-paths for n <= 7, both inverses exact."""
    for n in range(8):
        members = [
            p
            for p in itertools.permutations(range(1, n + 2))
            if is_class_member(p)
        ]
        images = [phi(p) for p in members]
        assert len(set(images)) == len(images), f"phi not injective at n={n}"
        paths = list(enumerate_schroeder(n))
        assert set(images) == set(paths), f"image misses paths at n={n}"
        for p, q in zip(members, images):
            assert phi_inverse(q) == p, f"inverse(phi) != id at {p}"
        for q in paths:
            assert phi(phi_inverse(q)) == q, f"phi(inverse) != id at {q}"
    return "bijective with exact two-sided inverse for all semilengths n <= 7"


def criterion_nonexcedance_bijection() -> str:
    """The 321-avoider <-> Dyck path map round-trips exhaustively, n <= 10."""
    total = 0
    for n in range(11):
        avoiders = list(enumerate_321_avoiders(n))
        images = [mdd_forward(p) for p in avoiders]
        assert len(set(images)) == len(avoiders)
        for p, d in zip(avoiders, images):
            assert mdd_inverse(d) == p, f"roundtrip failed at {p}"
        dycks = list(enumerate_dyck(n))
        assert set(images) == set(dycks)
        for d in dycks:
            assert mdd_forward(mdd_inverse(d)) == d, f"roundtrip failed at {d}"
        total += len(avoiders)
    assert total == sum(catalan_number(n) for n in range(11)), f"swept {total}"
    return f"round-trips on all {total} 321-avoiders and as many Dyck paths, n <= 10"


def criterion_worked_examples() -> str:
    """Hand-worked regression values reproduce exactly."""
    assert f_map((4, 6, 5, 2, 3, 8, 1, 7)) == (1, 7, 2, 3, 8, 4, 6, 5)
    table = excedance_split(WORKED_PERM)
    assert table.nonexc_positions == (1, 4, 7, 8, 10, 11)
    assert table.nonexc_values == (1, 2, 3, 7, 8, 10)
    code = ascent_descent_code(WORKED_PATH)
    assert code.top == (1, 4, 7, 8, 10)
    assert code.bottom == (1, 2, 6, 7, 9)
    assert mdd_forward(WORKED_PERM) == WORKED_PATH
    return "reversed-block image, non-excedance table, code, and path all match"


def criterion_excedance_characterizations() -> str:
    """Two excedance-based 321 tests agree with the pattern oracle, n <= 7."""

    def increasing(row):
        return all(a < b for a, b in zip(row, row[1:]))

    def by_both_rows(p):
        t = excedance_split(p)
        return increasing(t.exc_values) and increasing(t.nonexc_values)

    def by_rl_minima(p):
        t = excedance_split(p)
        rl = {v for _, v in right_to_left_minima(p)}
        return increasing(t.exc_values) and all(v in rl for v in t.nonexc_values)

    checked = 0
    for n in range(8):
        for p in itertools.permutations(range(1, n + 1)):
            want = not contains_pattern(p, (3, 2, 1))
            assert by_both_rows(p) == want, f"two-rows test wrong at {p}"
            assert by_rl_minima(p) == want, f"minima test wrong at {p}"
            assert avoids_321(p) == want, f"library test wrong at {p}"
            checked += 1
    return f"both characterizations agree with the oracle on {checked} permutations"


def criterion_peak_correspondence() -> str:
    """Peak up-steps align with non-excedance positions, all avoiders n <= 9."""
    checked = 0
    for n in range(10):
        for p in enumerate_321_avoiders(n):
            assert check_peak_correspondence(p), f"misaligned at {p}"
            checked += 1
    return f"peaks match non-excedances on all {checked} avoiders"


def criterion_code_soundness() -> str:
    """Codes and Dyck paths determine each other exactly."""
    for n in range(11):
        for d in enumerate_dyck(n):
            assert path_from_code(ascent_descent_code(d)) == d
    # full candidate-space sweep: every pair of subsets of {1..n-1} either
    # forms a code (and then a unique Dyck path) or is rejected
    for n in range(7):
        pool = range(1, n)
        subsets = [
            s
            for k in range(len(pool) + 1)
            for s in itertools.combinations(pool, k)
        ]
        produced = []
        for top in subsets:
            for bottom in subsets:
                legal = len(top) == len(bottom) and all(
                    b <= a for a, b in zip(top, bottom)
                )
                try:
                    code = AscentDescentCode(n, top, bottom)
                except InvalidCode:
                    assert not legal, f"rejected good code {top}/{bottom}"
                    continue
                assert legal, f"accepted bad code {top}/{bottom}"
                path = path_from_code(code)
                assert ascent_descent_code(path) == code, f"not stable: {path}"
                produced.append(path)
        assert sorted(produced) == sorted(enumerate_dyck(n)), f"mismatch at n={n}"
    return "codec round-trips (n <= 10) and the code space is exactly the path space (n <= 6)"


def criterion_non_closure() -> str:
    """Membership is not inherited by contained patterns."""
    assert is_class_member((1, 3, 2, 5, 4))
    assert not is_class_member((3, 2, 5, 4))
    assert contains_pattern((1, 3, 2, 5, 4), (3, 2, 5, 4))
    return "1 3 2 5 4 is in the class, its pattern 3 2 5 4 is not"


def criterion_sequence_cross_check() -> str:
    """Counting stays exact: reference table n <= 10, two routes at n = 40."""
    assert [schroeder_number(n) for n in range(11)] == SCHROEDER_REFERENCE
    big = schroeder_number(40)
    assert big == schroeder_number_by_binomial_sum(40)
    assert big == 13033522069997514889215092274
    return f"table matches and both routes give r(40) = {big}"


CRITERIA = [
    criterion_class_counts,
    criterion_bijectivity,
    criterion_nonexcedance_bijection,
    criterion_worked_examples,
    criterion_excedance_characterizations,
    criterion_peak_correspondence,
    criterion_code_soundness,
    criterion_non_closure,
    criterion_sequence_cross_check,
]


def test_01_class_counts_match_schroeder_numbers():
    print("PASS:", criterion_class_counts())


def test_02_bijection_exhaustive_small_sizes():
    print("PASS:", criterion_bijectivity())


def test_03_nonexcedance_bijection_roundtrips():
    print("PASS:", criterion_nonexcedance_bijection())


def test_04_worked_example_regressions():
    print("PASS:", criterion_worked_examples())


def test_05_excedance_characterizations_match_oracle():
    print("PASS:", criterion_excedance_characterizations())


def test_06_peak_correspondence_exhaustive():
    print("PASS:", criterion_peak_correspondence())


def test_07_code_soundness_and_completeness():
    print("PASS:", criterion_code_soundness())


def test_08_class_not_closed_under_patterns():
    print("PASS:", criterion_non_closure())


def test_09_schroeder_reference_and_big_n():
    print("PASS:", criterion_sequence_cross_check())


if __name__ == "__main__":
    import sys

    failures = 0
    for check in CRITERIA:
        try:
            message = check()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL: {check.__name__}: {exc}")
        else:
            print(f"PASS: {check.__name__}: {message}")
    sys.exit(1 if failures else 0)
