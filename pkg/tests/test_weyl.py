"""Testes de relbgg.weyl: palavras canônicas, ações e órbitas."""

import pytest

from relbgg import weyl
from relbgg.errors import OrbitCapExceeded, SpecError
from relbgg.rootsys import add_weights, as_weight, delta, neg_weight

from tests.conftest import random_rational_weight, random_weight, root_system


@pytest.mark.parametrize("label, order", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48)])
def test_group_order(label, order):
    assert len(weyl.enumerate_group(root_system(label))) == order


def test_parabolic_subgroup_order(a3):
    assert len(weyl.enumerate_group(a3, generators=[2, 3])) == 6


def test_word_length_matches_phi(a3):
    for w in weyl.enumerate_group(a3):
        assert w.length == len(weyl.phi_set(w))


def test_canonical_word(a3):
    w = weyl.from_word([2, 3], a3)
    assert w.word == (2, 3)
    assert weyl.word_string(w) == "s2 s3"
    assert weyl.word_string(weyl.identity(a3)) == "e"
    assert weyl.from_word([1, 1], a3) == weyl.identity(a3)


def test_braid_relation(a3, b2):
    assert weyl.from_word([1, 2, 1], a3) == weyl.from_word([2, 1, 2], a3)
    assert weyl.from_word([1, 3], a3) == weyl.from_word([3, 1], a3)
    assert weyl.from_word([1, 2, 1, 2], b2) == weyl.from_word([2, 1, 2, 1], b2)


def test_parse_word_forms(a3):
    expected = weyl.from_word([2, 3], a3)
    assert weyl.parse_word("s2 s3", a3) == expected
    assert weyl.parse_word("2,3", a3) == expected
    assert weyl.parse_word("e", a3) == weyl.identity(a3)


@pytest.mark.parametrize("text", ["s5 s1", "t2", "s0"])
def test_parse_word_rejects_bad_letters(a3, text):
    with pytest.raises(SpecError) as exc:
        weyl.parse_word(text, a3)
    assert exc.value.flag == "--word"


def test_linear_action_is_rightmost_first(a3):
    w = weyl.from_word([2, 3], a3)
    assert weyl.apply(weyl.inverse(w), (0, 1, 0)) == (1, 0, -1)
    assert weyl.apply(w, delta(a3)) == (3, -2, 1)


@pytest.mark.parametrize("a, b, c", [(0, 0, 0), (1, 0, 0), (-3, 2, 1), (5, 1, 4)])
def test_affine_action_formula(a3, a, b, c):
    w = weyl.from_word([2, 3], a3)
    assert weyl.affine_action(w, (a, b, c), delta(a3)) == (a + b + c + 2, -b - c - 3, b)


def test_phi_set(a3):
    w = weyl.from_word([2, 3], a3)
    assert weyl.phi_set(w) == {(0, 1, 0), (0, 1, 1)}


def test_multiply_and_inverse(b2):
    for w in weyl.enumerate_group(b2):
        assert weyl.multiply(w, weyl.inverse(w)) == weyl.identity(b2)
        assert weyl.inverse(weyl.inverse(w)) == w


def test_multiply_concatenates_words(a3):
    w1 = weyl.from_word([1, 2], a3)
    w2 = weyl.from_word([3, 1], a3)
    assert weyl.multiply(w1, w2) == weyl.from_word([1, 2, 3, 1], a3)


def test_is_in_subgroup(a3):
    assert weyl.is_in_subgroup(weyl.from_word([2, 3, 2], a3), [2, 3])
    assert not weyl.is_in_subgroup(weyl.from_word([1, 2], a3), [2, 3])


def test_orbit_words_reach_points(a3):
    points = weyl.orbit((0, 1, 0), [2, 3], a3)
    assert set(points) == {(0, 1, 0), (1, -1, 1), (1, 0, -1)}
    assert points[(0, 1, 0)] == ()
    for point, word in points.items():
        assert weyl.apply(weyl.from_word(word, a3), (0, 1, 0)) == point


def test_orbit_cap(a3, monkeypatch):
    monkeypatch.setenv("RELBGG_ORBIT_CAP", "5")
    with pytest.raises(OrbitCapExceeded):
        weyl.orbit(delta(a3), a3.nodes, a3)


def test_invalid_orbit_cap(a3, monkeypatch):
    monkeypatch.setenv("RELBGG_ORBIT_CAP", "muitos")
    with pytest.raises(SpecError) as exc:
        weyl.orbit(delta(a3), a3.nodes, a3)
    assert exc.value.flag == "RELBGG_ORBIT_CAP"


def test_bruhat_covers_of_s3(a2):
    covers = weyl.bruhat_covers(weyl.enumerate_group(a2))
    assert len(covers) == 8
    assert all(high.length == low.length + 1 for low, high in covers)


# ========== INVARIANTES ==========

@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_phi_determines_element(label):
    group = weyl.enumerate_group(root_system(label))
    assert len({w.phi for w in group}) == len(group)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A4", "B4", "C4", "D4"])
def test_phi_determines_element_rank_four(label):
    test_phi_determines_element(label)


@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_affine_action_is_a_group_action(label, rng):
    rs = root_system(label)
    group = weyl.enumerate_group(rs)
    shift = delta(rs)
    for _ in range(100):
        w1, w2 = rng.choice(group), rng.choice(group)
        weight = random_weight(rng, rs, rs.nodes, low=-6, high=6)
        inner = weyl.affine_action(w2, weight, shift)
        assert weyl.affine_action(weyl.multiply(w1, w2), weight, shift) == weyl.affine_action(w1, inner, shift)


@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_linear_action_preserves_norm(label, rng):
    rs = root_system(label)
    group = weyl.enumerate_group(rs)
    for _ in range(200):
        w = rng.choice(group)
        weight = random_rational_weight(rng, rs)
        assert rs.norm_sq(weyl.apply(w, weight)) == rs.norm_sq(weight)


def test_dot_action_on_zero_is_minus_phi_sum(a3, rng):
    group = weyl.enumerate_group(a3)
    for w in rng.sample(group, 20):
        total = as_weight([0, 0, 0])
        for root in w.phi:
            total = add_weights(total, a3.root_to_weight(root))
        assert weyl.affine_action(w, (0, 0, 0), delta(a3)) == neg_weight(total)
