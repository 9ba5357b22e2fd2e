import itertools

import pytest

from permpaths.counting import (
    SizeGuard,
    catalan_number,
    count_class_members,
    enumerate_321_avoiders,
    enumerate_class_members,
    enumerate_dyck,
    enumerate_permutations,
    enumerate_schroeder,
    schroeder_number,
    schroeder_number_by_binomial_sum,
    unrank_schroeder,
    verify_bijection,
)
from permpaths.paths import parse_path
from permpaths.permutations import contains_pattern

# first eleven large Schroeder numbers, fixed reference
SCHROEDER = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718]


def test_schroeder_reference_table():
    assert [schroeder_number(n) for n in range(11)] == SCHROEDER


def test_schroeder_two_routes_agree():
    for n in range(41):
        assert schroeder_number(n) == schroeder_number_by_binomial_sum(n)
    assert schroeder_number(40) == 13033522069997514889215092274


def test_schroeder_rejects_negative():
    with pytest.raises(ValueError):
        schroeder_number(-1)


def test_catalan():
    assert [catalan_number(n) for n in range(11)] == [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
    ]


# ------------------------------------------------------------ enumerators


def test_permutations_enumerator():
    got = list(enumerate_permutations(3))
    assert got == sorted(got)
    assert len(got) == 6


def test_avoiders_enumerator():
    for n in range(8):
        got = list(enumerate_321_avoiders(n))
        assert got == sorted(got)
        assert len(got) == catalan_number(n)
        want = [
            p
            for p in itertools.permutations(range(1, n + 1))
            if not contains_pattern(p, (3, 2, 1))
        ]
        assert got == want


def test_dyck_enumerator():
    assert list(enumerate_dyck(2)) == ["UUDD", "UDUD"]
    for n in range(9):
        got = list(enumerate_dyck(n))
        assert len(got) == catalan_number(n)
        assert len(set(got)) == len(got)
        assert all(parse_path(p) == p and "F" not in p for p in got)


def test_schroeder_enumerator():
    assert list(enumerate_schroeder(2)) == ["UUDD", "UDUD", "UDF", "UFD", "FUD", "FF"]
    for n in range(8):
        got = list(enumerate_schroeder(n))
        assert len(got) == schroeder_number(n)
        assert len(set(got)) == len(got)
        assert all(parse_path(p) == p for p in got)
        # lexicographic under U < D < F
        order = {"U": 0, "D": 1, "F": 2}
        keyed = [[order[c] for c in p] for p in got]
        assert keyed == sorted(keyed)


def test_class_member_counts():
    assert [count_class_members(n) for n in range(1, 8)] == SCHROEDER[:7]
    assert list(enumerate_class_members(3)) == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1),
    ]


# ------------------------------------------------------------- size guard


def test_guards_refuse_oversize_sweeps():
    with pytest.raises(SizeGuard):
        enumerate_permutations(12)
    with pytest.raises(SizeGuard):
        enumerate_321_avoiders(12)
    with pytest.raises(SizeGuard):
        enumerate_schroeder(15)
    with pytest.raises(SizeGuard):
        enumerate_dyck(15)
    with pytest.raises(SizeGuard):
        count_class_members(12)


def test_guards_can_be_raised_explicitly():
    gen = enumerate_permutations(12, limit_override=12)
    assert next(gen) == tuple(range(1, 13))
    gen = enumerate_schroeder(15, limit_override=15)
    assert next(gen) == "U" * 15 + "D" * 15


def test_guard_override_can_also_lower():
    with pytest.raises(SizeGuard):
        enumerate_permutations(5, limit_override=4)


# --------------------------------------------------------------- unranking


def test_unrank_matches_enumeration_order():
    for n in range(7):
        want = list(enumerate_schroeder(n))
        got = [unrank_schroeder(n, r) for r in range(schroeder_number(n))]
        assert got == want


def test_unrank_bounds():
    with pytest.raises(IndexError):
        unrank_schroeder(3, -1)
    with pytest.raises(IndexError):
        unrank_schroeder(3, 22)
    assert unrank_schroeder(0, 0) == ""


def test_unrank_large_smoke():
    # far beyond anything enumerable; validity is still cheap to confirm
    path = unrank_schroeder(60, schroeder_number(60) // 2)
    assert parse_path(path) == path
    assert path.count("U") + path.count("F") == 60


# ------------------------------------------------------------ verification


def test_verify_bijection_small():
    report = verify_bijection(4)
    assert report.ok
    assert [row.class_size for row in report.rows] == SCHROEDER[:5]
    assert all(row.image_complete and row.round_trips for row in report.rows)


def test_verify_respects_override():
    with pytest.raises(SizeGuard):
        verify_bijection(4, limit_override=3)
