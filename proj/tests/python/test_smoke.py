from fractions import Fraction

import pytest

import finitehyper as fh


def test_gauss_instance():
    assert fh.finite_gauss_sides(Fraction(1, 2), Fraction(1, 2), 2, 1) == (
        Fraction(9, 8),
        Fraction(9, 8),
    )


def test_rational_inputs():
    assert fh.truncated_mzv("2", 3) == Fraction(5, 4)
    assert fh.truncated_mzv([2], 3) == fh.msw_rhs("2", 3)
    assert fh.thg_int_rhs("1/2", 1, 2, "1/2", 1) == Fraction(5, 4)
    assert fh.rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)


def test_generating_functions():
    direct = fh.phi0(3, Fraction(1, 2), 3)
    assert direct == fh.phi0(3, Fraction(1, 2), 3, "product")
    assert direct == fh.phi0(3, Fraction(1, 2), 3, "closed")
    s1, s2, s3 = fh.toz_special_sides(3, 4)
    assert s1 == s2 == s3
    assert s1[(0, 0, 0)] == Fraction(5, 4)
    assert fh.prop54_sides(3, 1, 1, 3) == (Fraction(9, 8), Fraction(9, 8))
    assert fh.reconstruct_p(2, 1, 1) == "Z2"
    assert fh.enumerate_i0_tilde(4, 2, 1) == ["1,3;0", "3;1"]


def test_congruence():
    assert fh.ak_congruence_sides([1], 2, 5) == (1, 1)


def test_errors():
    with pytest.raises(fh.PoleError):
        fh.truncated_mpl([1], 2, 4)
    with pytest.raises(fh.UnknownIdentity):
        fh.run_identity("unknown-id")
    with pytest.raises(fh.Error):
        fh.truncated_mzv("", 3)


def test_harness():
    assert len(fh.identity_catalog()) == 18
    reports = fh.run_identity("finite-gauss", trials=5)
    assert len(reports) == 5
    assert all(r["equal"] for r in reports)
    assert fh.verify_report("msw", "json") == fh.verify_report("msw", "json")
    assert all(l["pass"] for l in fh.run_limits())
