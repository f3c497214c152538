"""Tests for the finite basic affine space and its operator algebras."""

import doctest

import pytest

import braidties.finite_model as FM
from braidties.finite_model import (
    SmallField, build_model, delta_in_epsilon_span, expected_size_x,
    mat_det, mat_identity, mat_mul, monodromic_crosscheck, op_es_equals_E,
    op_ks_equals_L, verify_main_identity)
from braidties.scalars import Cyclotomic


def _assert_report_ok(rep):
    bad = [label for label, ok in rep["checks"] if not ok]
    assert not bad, f"failed checks: {bad}"
    assert rep["ok"]


def test_module_doctests():
    results = doctest.testmod(FM)
    assert results.failed == 0
    assert results.attempted > 0


def test_small_field_gf4():
    F = SmallField(2, 2)
    assert F.size == 4
    for a in range(4):
        for b in range(4):
            assert F.add_t[a][b] == F.add_t[b][a]
            assert F.mul_t[a][b] == F.mul_t[b][a]
    for a in range(1, 4):
        assert F.mul_t[a][F.inv_t[a]] == 1
    assert sorted(F.log[a] for a in range(1, 4)) == [0, 1, 2]
    # Frobenius-invariant trace: over GF(4) inversion is squaring.
    assert all(F.trace[a] == F.trace[F.inv_t[a]] for a in range(1, 4))


def test_small_field_gf8_trace_not_inversion_invariant():
    F = SmallField(2, 3)
    assert any(F.trace[a] != F.trace[F.inv_t[a]] for a in range(1, 8))


def test_small_field_gf9():
    F = SmallField(3, 2)
    assert F.size == 9
    for a in range(1, 9):
        assert F.mul_t[a][F.inv_t[a]] == 1
        assert F.add_t[a][F.neg_t[a]] == 0
    assert all(F.trace[a] in (0, 1, 2) for a in range(9))


def test_matrix_helpers():
    F = SmallField(2, 1)
    I = mat_identity(2)
    a = ((1, 1), (0, 1))
    assert mat_mul(F, a, I) == a
    assert mat_det(F, a) == 1
    b = ((0, 1), (1, 0))
    assert mat_det(F, b) == 1  # -1 = 1 in characteristic 2


def test_model_sizes():
    assert expected_size_x(1, 2) == 3
    assert expected_size_x(1, 4) == 15
    assert expected_size_x(2, 2) == 21
    assert expected_size_x(2, 4) == 945
    m = build_model(1, 2, 1)
    assert len(m.x_reps) == 3 and len(m.group) == 6
    m = build_model(2, 2, 1)
    assert len(m.x_reps) == 21 and len(m.group) == 168


def test_size_ceiling_enforced():
    with pytest.raises(ValueError):
        build_model(2, 2, 3)  # SL_3(F_8): |X| = 32193


def test_prime_power_q():
    # q = 4, k = 1 builds the same field as q = 2, k = 2
    m = build_model(1, 4, 1)
    assert m.qk == 4 and len(m.x_reps) == 15


def test_main_identity_sl2_f2():
    _assert_report_ok(verify_main_identity(1, 2, 1))


def test_main_identity_sl2_f4():
    _assert_report_ok(verify_main_identity(1, 2, 2))


def test_main_identity_sl3_f2():
    _assert_report_ok(verify_main_identity(2, 2, 1))


def test_main_identity_odd_characteristic():
    # chi(-r) differs from chi(r) here: pins the sign conventions.
    _assert_report_ok(verify_main_identity(1, 3, 1))


def test_op_ks_is_L_s_directly():
    for cfg in [(1, 2, 1), (1, 2, 2), (2, 2, 1)]:
        m = build_model(*cfg)
        assert op_ks_equals_L(m)
        assert op_es_equals_E(m)


def test_delta_in_epsilon_span():
    rep = delta_in_epsilon_span(1, 2, 1)
    assert rep["solved"] and rep["coefficients"] == [1]
    rep = delta_in_epsilon_span(1, 2, 2)
    assert rep["solved"]
    from fractions import Fraction
    assert rep["coefficients"] == [Fraction(1, 3)] * 3
    rep = delta_in_epsilon_span(2, 2, 1)
    assert rep["solved"] and rep["count"] == 1


def test_crosscheck_all_characters_rank_one():
    for exps in [(0, 0), (1, 0), (2, 0)]:
        rep = monodromic_crosscheck(1, 2, 2, exps)
        assert rep["ok"], rep
        letter = rep["letters"][0]
        assert letter["inside_circle"] == (exps[0] == exps[1])


def test_crosscheck_kappa_is_real_at_f4():
    # The Gauss sum of the quadratic-free cubic character over GF(4)
    # equals 2, so the per-corner phase is exactly -1.
    rep = monodromic_crosscheck(1, 2, 2, (1, 0))
    assert rep["letters"][0]["kappa"] == "-1"
    m = build_model(1, 2, 2)
    from braidties.monodromic import torus_character
    G = m.gauss_sum(1, torus_character(3, (1, 0)))
    assert G == Cyclotomic.from_rational(m.N, 2)


def test_crosscheck_requires_square_field():
    with pytest.raises(ValueError):
        monodromic_crosscheck(1, 2, 1, (0, 0))


def test_gauss_sum_trivial_character():
    # With the trivial character the Gauss sum collapses to -1.
    for cfg in [(1, 2, 1), (1, 2, 2), (2, 2, 1)]:
        m = build_model(*cfg)
        from braidties.monodromic import trivial_character
        theta = trivial_character(m.m, max(m.qk - 1, 1))
        for i in range(1, m.m):
            assert m.gauss_sum(i, theta) == Cyclotomic.from_rational(m.N, -1)


@pytest.mark.slow
def test_main_identity_sl2_f8():
    _assert_report_ok(verify_main_identity(1, 2, 3))


@pytest.mark.slow
def test_main_identity_sl2_f5():
    _assert_report_ok(verify_main_identity(1, 5, 1))


@pytest.mark.slow
def test_main_identity_sl3_f4():
    _assert_report_ok(verify_main_identity(2, 2, 2))


@pytest.mark.slow
def test_crosscheck_rank_two():
    for exps in [(0, 0, 0), (1, 1, 0), (1, 2, 0)]:
        rep = monodromic_crosscheck(2, 2, 2, exps)
        assert rep["ok"], rep


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
