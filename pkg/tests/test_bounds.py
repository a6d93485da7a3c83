"""Exception tests, the thirds inequality, and the triangle decomposition audit."""

import math

import pytest

from wpinterp import (
    FatPointConfig,
    Weights,
    classify_plane_123_uniqueness,
    count_monomials,
    exception_classifier_div3,
    exception_sufficient,
    hilbert_fat_points,
    interpolation_bound_check,
    minimal_balanced_degree,
    neck_condition,
    triangle_lattice_check,
)

P2 = Weights((1, 1, 1))
W123 = Weights((1, 2, 3))


def test_exception_sufficient_known_cases():
    assert exception_sufficient(P2, 5, 4)
    assert exception_sufficient(P2, 2, 2)
    assert not exception_sufficient(P2, 6, 4)  # r = s_{d/2} already fails
    assert not exception_sufficient(P2, 0, 4)
    assert not exception_sufficient(P2, 3, 0)


def test_exception_sufficient_is_sound():
    # every flagged pair must show an actual rank drop
    for d in range(1, 9):
        for r in range(1, 8):
            if not exception_sufficient(P2, r, d):
                continue
            cfg = FatPointConfig(P2, (2,) * r, seed=5, trials=2)
            assert hilbert_fat_points(cfg, d).deficiency > 0, (r, d)


def test_exception_sufficient_never_fires_on_123():
    for d in range(1, 25):
        s_d = count_monomials(W123, d)
        for r in range(1, math.ceil(s_d / 3) + 2):
            assert not exception_sufficient(W123, r, d)


def test_exception_sufficient_requires_unit_weight():
    with pytest.raises(ValueError):
        exception_sufficient(Weights((2, 3, 5)), 2, 10)


def test_div3_classifier():
    assert exception_classifier_div3(P2, 2)
    assert exception_classifier_div3(P2, 4)
    assert not exception_classifier_div3(W123, 3)
    assert not exception_classifier_div3(W123, 9)
    with pytest.raises(ValueError):
        exception_classifier_div3(W123, 2)  # s_2 = 2 is not divisible by 3
    with pytest.raises(ValueError):
        exception_classifier_div3(Weights((1, 1, 1, 1)), 3)


def test_neck_condition():
    assert neck_condition(W123, 1)
    assert not neck_condition(Weights((1, 2, 5)), 1)
    assert neck_condition(Weights((1, 2, 5)), 2)
    assert neck_condition(Weights((1, 1, 3)), 2)
    assert not neck_condition(Weights((1, 1, 3)), 1)


def test_neck_condition_failure_forces_a_deficiency():
    # (1,2,5) with one double point: degree 4 already drops rank
    cfg = FatPointConfig(Weights((1, 2, 5)), (2,), seed=1, trials=2)
    prof = hilbert_fat_points(cfg, 4)
    assert prof.expected == 3
    assert prof.deficiency > 0


def test_bound_check_report_123():
    report = interpolation_bound_check(2, 3, range(2, 37))
    assert not report.ratio_ok
    assert report.threshold == 30
    row = next(r for r in report.rows if r.d == 30)
    assert (row.lhs, row.rhs, row.holds, row.asserted) == (30, 27, True, True)
    low = next(r for r in report.rows if r.d == 2)
    assert not low.holds and not low.asserted  # quiet failure below threshold
    assert report.all_asserted_hold


def test_bound_check_ratio_regime():
    report = interpolation_bound_check(1, 3, [18, 20])
    assert report.ratio_ok
    assert report.threshold == 18
    assert report.all_asserted_hold


def test_bound_check_validates_b_and_c():
    with pytest.raises(ValueError):
        interpolation_bound_check(3, 2, [30])
    with pytest.raises(ValueError):
        interpolation_bound_check(0, 2, [30])


@pytest.mark.parametrize("b,c", [(1, 1), (1, 2), (2, 3), (2, 5), (3, 4), (4, 5)])
def test_triangle_decomposition_audit(b, c):
    w = Weights((1, b, c))
    for d in (2 * c, 2 * c + 1, 6 * c, 6 * c + 3, 10 * c, 10 * c + 7):
        dec = triangle_lattice_check(b, c, d)
        assert dec.total == count_monomials(w, d)
        assert dec.t1 == count_monomials(w, d // 2)
        assert dec.t1 == dec.t2 == dec.t3
        assert dec.i13 <= dec.i13_cap
        assert dec.disjoint_middle
        assert dec.covered
        if dec.t4_bound is not None:
            assert dec.t4_interior >= dec.t4_bound
            assert dec.aggregate_holds


def test_triangle_needs_room():
    with pytest.raises(ValueError):
        triangle_lattice_check(2, 3, 5)
    with pytest.raises(ValueError):
        triangle_lattice_check(3, 2, 20)


def test_minimal_balanced_degree():
    assert minimal_balanced_degree(2, 5, 2) == 7
    with pytest.raises(ValueError):
        minimal_balanced_degree(2, 5, 3)  # 5 < rb already

    for b, c, r in [(2, 5, 2), (3, 7, 2), (2, 7, 3), (4, 9, 2), (3, 10, 3)]:
        assert r * b < c < (r + 1) * b
        d0 = minimal_balanced_degree(b, c, r)
        w = Weights((1, b, c))
        assert count_monomials(w, d0) == 3 * r
        assert all(count_monomials(w, d) != 3 * r for d in range(d0))


def test_plane_uniqueness_classifier():
    report = classify_plane_123_uniqueness(c_max=6, r_max=6, d_max=24)
    assert report.exception_free == [(2, 3)]
    witnesses = {
        (rec.b, rec.c): (rec.r, rec.d) for rec in report.records if rec.has_exception
    }
    assert witnesses[(1, 1)] == (2, 2)
    assert witnesses[(1, 2)] == (3, 4)
    assert witnesses[(2, 5)] == (1, 4)
    assert witnesses[(3, 4)] == (2, 8)
    assert witnesses[(3, 5)] == (3, 12)
    assert witnesses[(4, 5)] == (2, 10)
    assert witnesses[(5, 6)] == (2, 12)
    for rec in report.records:
        if rec.has_exception:
            assert rec.deficiency > 0
            assert exception_sufficient(Weights((1, rec.b, rec.c)), rec.r, rec.d)
