from fractions import Fraction

import pytest

import almostcover as ac


def test_point_set_roundtrip():
    s = ac.PointSet([(0, 0), ("1/2", 3), (Fraction(2), -1)])
    assert len(s) == 3
    assert s.dim == 2
    assert s.points[1] == (Fraction(1, 2), Fraction(3))
    again = ac.PointSet.from_text(s.to_text())
    assert again.points == s.points


def test_gf_family():
    s = ac.PointSet.family("ag:2:3")
    assert s.field == ac.Field.prime(3)
    assert len(s) == 9
    assert all(isinstance(c, int) for p in s.points for c in p)


def test_groebner_basis():
    gb = ac.GroebnerBasis(ac.PointSet.family("vnk:2:1"))
    assert sorted(gb.basis) == ["x1*x2", "x1^2 - x1", "x2^2 - x2"]
    assert gb.standard_monomials == ["1", "x2", "x1"]
    assert gb.normal_form("x1^3 + x1*x2") == "x1"
    assert gb.check_invariants() == []
    assert gb.separating_degree(0) == 1


def test_bounds():
    assert ac.counting_lower_bound(2, 6) == 2
    assert ac.cube_counting_lower_bound(4, 16) == 4
    bound, index = ac.certificate_lower_bound(ac.PointSet.family("cube:3"))
    assert bound == 3
    assert 0 <= index < 8
    assert ac.binomial_inequalities_hold(10, 3)


def test_cover():
    cube = ac.PointSet.family("cube:3")
    sol = ac.min_almost_cover(cube, 0)
    assert sol["size"] == 3
    assert sol["optimal"]
    numbers = ac.ac_numbers(cube, symmetry_of="cube:3")
    assert numbers["AC"] == numbers["ac"] == 3
    assert ac.verify_cover(cube, 0, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1)])
    assert not ac.verify_cover(cube, 0, [((1, 1, 1), 0)])


def test_verify_suite():
    report = ac.verify_suite("main", max_n=3)
    assert report["passed"]
    assert "main" in ac.verify_suites


def test_errors():
    with pytest.raises(ac.AlmostCoverError):
        ac.PointSet([(0, 0), (0, 0)])
    with pytest.raises(ValueError):
        ac.PointSet.family("blob:2")
    with pytest.raises(ac.AlmostCoverError):
        ac.min_almost_cover(ac.PointSet.family("cube:2"), 9)
