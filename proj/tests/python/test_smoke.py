"""Smoke tests for the python module (thin checks; the C++ suites carry the load)."""

from fractions import Fraction

import pytest

import sumsetlab as sl


def test_sumset_and_growth():
    assert sl.sumset([(0,), (2,), (3,)], 3) == [
        (0,), (2,), (3,), (4,), (5,), (6,), (7,), (8,), (9,)
    ]
    assert sl.growth_table([(0,), (2,), (5,)], 4) == [3, 6, 10, 15]
    assert sl.width([(0, 0), (1, 1), (2, 0), (0, 3)]) == 3


def test_membership_and_exceptional():
    a = [(0,), (2,), (3,)]
    assert sl.min_rep_length(a, (7,)) == 3
    assert sl.min_rep_length(a, (1,)) is None
    assert sl.psa_membership(a, (5,))
    assert not sl.psa_membership(a, (1,))
    exc = sl.exceptional_set([(0,), (2,), (5,)], [(0,), (20,)])
    assert exc == [(1,), (3,)]


def test_geometry():
    hull = sl.convex_hull([(0, 0), (2, 0), (0, 3), (1, 1)])
    assert hull["affine_dim"] == 2
    assert (1, 1) not in hull["vertices"]
    assert sl.normalized_volume([(0, 0), (1, 1), (2, 0), (0, 3)]) == 6
    assert sl.is_simplex([(0, 0), (1, 0), (0, 1), (1, 1)]) is None
    assert len(sl.caratheodory_cover([(0, 0), (1, 0), (0, 1), (1, 1)])) == 2
    assert sl.hermite_normal_form([(1, 1), (2, 0), (0, 3)]) == [(1, 0), (0, 1)]
    assert sl.quotient_invariants([(1, 0), (0, 1)], [(2, 0), (0, 3)]) == [6]


def test_khovanskii_pipelines():
    fit = sl.fit_growth([(0,), (2,), (5,)], 8)
    assert fit["coefficients"] == [Fraction(-5), Fraction(5)]
    assert fit["onset"] == 3
    simplex = sl.khovanskii_simplex([(0,), (2,), (5,)])
    assert simplex["total"]["coefficients"] == fit["coefficients"]
    assert simplex["onset"] == 3
    general = sl.khovanskii_general([(0,), (1,), (2,)], 3)
    assert general["pretty"] == "2*N + 1"
    assert general["certified"]
    fam = sl.minimal_useless([(0,), (1,), (2,)], 3)
    assert [m["exponents"] for m in fam["members"]] == [[1, 0, 1]]


def test_structure_and_constants():
    v = sl.verify_structure([(0, 0), (1, 1), (2, 0), (0, 3)], 4)
    assert v["equal"] and v["inclusion"]
    onset = sl.structure_onset([(0,), (2,), (5,)], 6)
    assert onset["onset"] == 1
    assert sl.davenport_constant([12]) == 12
    assert sl.davenport_constant([2, 2]) == 3
    assert sl.k_constant([6], [[1]]) == 5
    fam = sl.b_minimal([(0,), (2,), (3,)], [(3,)])
    assert fam["complete"] and fam["K"] == 2


def test_solvers():
    assert sl.small_kernel_vector([[2, 3]]) == (3, -2)
    y = sl.positive_solution([[1, -1]], [0], [7, 7])
    assert y == [1, 1]
    fam = sl.minimal_positive_solutions([[2, -3]], [0], 1)
    assert fam["solutions"] == [[3]]
    basis = sl.bounded_kernel_basis([[1, 1, 1]])
    assert basis["bound_holds"] and len(basis["basis"]) == 2
    assert sl.minmax_identity([3, 1, 4, 1, 5]) == -1


def test_errors():
    with pytest.raises(ValueError):
        sl.psa_membership([(2,), (3,)], (5,))  # 0 missing from A
    sl.set_budget(50, 50)
    try:
        with pytest.raises(RuntimeError):
            sl.growth_table([(0, 0), (2, 0), (0, 3), (1, 1)], 12)
    finally:
        sl.set_budget()
