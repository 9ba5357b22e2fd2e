import itertools

import pytest

from permpaths.counting import enumerate_schroeder, schroeder_number
from permpaths.permutations import EmptyPermutation, is_class_member, lr_decompose
from permpaths.schroeder import BijectionTrace, NotInClass, phi, phi_inverse, phi_trace


def members(length):
    return (
        p
        for p in itertools.permutations(range(1, length + 1))
        if is_class_member(p)
    )


def test_small_values():
    assert phi((1,)) == ""
    assert phi((1, 2)) == "UD"
    assert phi((2, 1)) == "F"
    assert phi((2, 1, 3)) == "UFD"
    assert phi((3, 2, 1)) == "FF"
    assert phi((1, 2, 3)) == "UDUD"


def test_small_inverses():
    assert phi_inverse("") == (1,)
    assert phi_inverse("UD") == (1, 2)
    assert phi_inverse("F") == (2, 1)
    assert phi_inverse("UFD") == (2, 1, 3)


def test_empty_input_rejected():
    with pytest.raises(EmptyPermutation):
        phi(())


def test_not_in_class_reports_witness():
    with pytest.raises(NotInClass) as err:
        phi((4, 6, 5, 2, 3, 8, 1, 7))
    exc = err.value
    assert exc.f_image == (1, 7, 2, 3, 8, 4, 6, 5)
    assert exc.witness_values == (8, 6, 5)
    assert exc.witness_positions == (5, 7, 8)
    assert "8 6 5" in str(exc)


def test_trace_hand_case():
    trace = phi_trace((5, 6, 2, 4, 1, 3))
    assert trace == BijectionTrace(
        input=(5, 6, 2, 4, 1, 3),
        lr_minima=((1, 5), (3, 2), (5, 1)),
        blocks=((5, 6), (2, 4), (1, 3)),
        f=(1, 3, 2, 4, 5, 6),
        f_prime=(2, 1, 3, 4, 5),
        nonexcedances=((2, 3, 4, 5), (1, 3, 4, 5)),
        code="n=5; a=2,3,4; b=2,3,4",
        dyck="UUDDUDUDUD",
        designated_peaks=(1, 3),
        schroeder="UFDUDFUD",
    )
    assert phi((5, 6, 2, 4, 1, 3)) == trace.schroeder
    assert phi_inverse(trace.schroeder) == trace.input


def test_bijective_on_small_sizes():
    for n in range(6):
        images = [phi(p) for p in members(n + 1)]
        assert len(images) == schroeder_number(n)
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_schroeder(n))


def test_round_trips_both_ways():
    for n in range(6):
        for p in members(n + 1):
            assert phi_inverse(phi(p)) == p
        for path in enumerate_schroeder(n):
            assert phi(phi_inverse(path)) == path


def test_flatstep_count_is_block_count_minus_one():
    for n in range(6):
        for p in members(n + 1):
            assert phi(p).count("F") == len(lr_decompose(p)) - 1


def test_extreme_permutations():
    for n in range(8):
        increasing = tuple(range(1, n + 2))
        decreasing = tuple(range(n + 1, 0, -1))
        assert phi(increasing) == "UD" * n
        assert phi(decreasing) == "F" * n
