"""Tests for the orbit algebra of torus characters and the word-level
surjections out of the braid-image subalgebra."""

import math
import random

import pytest

from braidties import btalg, hecke, monodromic as mono
from braidties.coxeter import all_perms, perm_mul, simple_perm
from braidties.scalars import RationalFunctionScalar as RF

V = RF.V


# --- characters and their orbit ---------------------------------------

def test_character_normalization():
    t = mono.torus_character(5, (7, 3, 2))
    assert t.exponents == (0, 1, 0)
    assert t.modulus == 5
    assert mono.torus_character(5, (2, 1, 0)) == mono.torus_character(5, (7, 6, 5))


def test_w_act_is_a_left_action():
    rng = random.Random(3)
    m = 4
    perms = all_perms(m)
    for _ in range(40):
        theta = mono.torus_character(4, tuple(rng.randrange(4) for _ in range(m)))
        w1, w2 = rng.choice(perms), rng.choice(perms)
        assert mono.w_act(w1, mono.w_act(w2, theta)) == \
            mono.w_act(perm_mul(w1, w2), theta)


def test_w_circle_trivial_is_all_reflections():
    t = mono.trivial_character(4, 3)
    assert mono.w_circle(t) == frozenset(
        (i, j) for i in range(1, 5) for j in range(i + 1, 5))


def test_w_circle_example():
    t = mono.torus_character(3, (1, 1, 0))
    assert mono.w_circle(t) == frozenset({(1, 2)})
    assert mono.simple_in_circle(1, t)
    assert not mono.simple_in_circle(2, t)


def test_w_circle_transport():
    rng = random.Random(9)
    m = 3
    for _ in range(30):
        theta = mono.torus_character(3, tuple(rng.randrange(3) for _ in range(m)))
        w = rng.choice(all_perms(m))
        moved = mono.w_circle(mono.w_act(w, theta))
        expect = frozenset(tuple(sorted((w[i - 1], w[j - 1])))
                           for (i, j) in mono.w_circle(theta))
        assert moved == expect


def test_orbits_partition_all_characters():
    chars = mono.all_characters(3, 3)
    assert len(chars) == 9
    seen = set()
    for t in chars:
        if t in seen:
            continue
        orb = mono.orbit_of(t)
        assert not seen.intersection(orb)
        seen.update(orb)
    assert len(seen) == 9


# --- orbit algebra relations ------------------------------------------

@pytest.mark.parametrize("n", [1, 2])
def test_ho_relations(n):
    checks = mono.verify_ho_relations(n, 3)
    bad = [label for label, ok in checks if not ok]
    assert bad == []


def test_idempotents_annihilate_across_corners():
    L = mono.torus_character(3, (1, 0))
    M = mono.torus_character(3, (2, 0))
    assert mono.ho_mul(mono.corner_unit(L), mono.corner_unit(M)).terms == {}
    assert mono.ho_mul(mono.corner_unit(L), mono.corner_unit(L)) == \
        mono.corner_unit(L)


def test_quadratic_outside_circle_squares_to_scalar():
    L = mono.torus_character(3, (1, 0))
    assert not mono.simple_in_circle(1, L)
    x = mono.lmul_As(1, mono.lmul_As(1, mono.corner_unit(L)))
    assert x == mono.corner_unit(L).scale(V * V)


def test_trivial_orbit_matches_hecke():
    assert mono.verify_hecke_comparison(2)


# --- pi_L on signed generator words ------------------------------------

def test_pi_empty_word_is_corner_unit():
    L = mono.torus_character(3, (2, 1, 0))
    assert mono.pi_L((), L) == mono.corner_unit(L)


def test_pi_inverse_pairs_give_corner_idempotent():
    L0 = mono.torus_character(3, (1, 0, 0))
    for L in mono.orbit_of(L0):
        for i in (1, 2):
            assert mono.pi_L((i, -i), L) == mono.corner_unit(L)
            assert mono.pi_L((-i, i), L) == mono.corner_unit(L)


def test_pi_braid_relation():
    L0 = mono.torus_character(3, (1, 2, 0))
    for L in mono.orbit_of(L0):
        assert mono.pi_L((1, 2, 1), L) == mono.pi_L((2, 1, 2), L)


def test_pi_cubic_relation():
    Q = V * V
    combo = {(1,): RF.ONE, (): Q, (1, 1): -Q}
    for exps in [(0, 0, 0), (1, 0, 0), (1, 2, 0)]:
        L0 = mono.torus_character(3, exps)
        for L in mono.orbit_of(L0):
            assert mono.pi_L((1, 1, 1), L) == mono.pi_of_combo(combo, L)


def test_pi_consistency_small():
    rep = mono.pi_consistency(1, 40, seed=5)
    assert rep["failures"] == 0
    rep = mono.pi_consistency(2, 40, seed=6)
    assert rep["failures"] == 0


def test_pi_trivial_sends_lifts_to_canonical_basis_s3():
    triv = mono.trivial_character(3)
    for w in all_perms(3):
        img = mono.hecke_image(mono.pi_of_combo(btalg.kl_lift_combo(w), triv))
        assert img == hecke.canonical_basis(w)


@pytest.mark.slow
def test_pi_trivial_sends_lifts_to_canonical_basis_s4():
    triv = mono.trivial_character(4)
    for w in all_perms(4):
        img = mono.hecke_image(mono.pi_of_combo(btalg.kl_lift_combo(w), triv))
        assert img == hecke.canonical_basis(w)


def test_pi_image_rank_fills_corner_column():
    # measured: words reach the whole column H_o 1_L at small rank
    assert mono.pi_image_rank(mono.trivial_character(2), 4) == 2
    assert mono.pi_image_rank(mono.trivial_character(3), 5) == 6
    assert mono.pi_image_rank(mono.torus_character(3, (1, 0, 0)), 5) == 6


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
