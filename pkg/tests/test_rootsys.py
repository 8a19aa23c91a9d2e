"""Testes de relbgg.rootsys: matrizes de Cartan, raízes positivas e forma de Killing."""

from fractions import Fraction

import pytest

from relbgg.errors import CartanError
from relbgg.rootsys import (
    build_root_system,
    cartan_of_type,
    delta,
    dynkin_ascii,
    format_weight,
    parse_algebra,
)

from tests.conftest import random_rational_weight, root_system


@pytest.mark.parametrize("label, count", [
    ("A1", 1), ("A3", 6), ("B2", 4), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24),
    ("E6", 36), ("A2xA1", 4),
])
def test_positive_root_counts(label, count):
    assert len(root_system(label).positive_roots) == count


def test_positive_roots_sorted_by_height(a2):
    assert a2.positive_roots == ((1, 0), (0, 1), (1, 1))


def test_b2_roots_and_cartan(b2):
    assert cartan_of_type("B", 2) == ((2, -2), (-1, 2))
    assert set(b2.positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_delta_is_all_ones():
    for label in ("A3", "B3", "G2", "A2xA1"):
        rs = root_system(label)
        assert delta(rs) == tuple(Fraction(1) for _ in rs.nodes)


def test_simple_root_in_fundamental_coordinates(a3):
    assert a3.simple_root_weight(1) == (2, -1, 0)
    assert a3.root_to_weight((1, 1, 1)) == (1, 0, 1)


def test_weight_root_round_trip(a3):
    for root in a3.positive_roots:
        assert a3.weight_to_root(a3.root_to_weight(root)) == root


@pytest.mark.parametrize("label, expected", [("A1", Fraction(1, 2)), ("A2", Fraction(1, 3)), ("A3", Fraction(1, 4))])
def test_killing_norm_of_simple_root(label, expected):
    # Para sl(n), (alpha, alpha) = 1/n na forma de Killing
    rs = root_system(label)
    assert rs.norm_sq(rs.simple_root_weight(1)) == expected


def test_coroot_killing_of_sl2():
    assert root_system("A1").coroot_killing == ((Fraction(8),),)


def test_pairing_with_delta_is_height_when_simply_laced(a3):
    for root in a3.positive_roots:
        assert a3.pairing(delta(a3), root) == sum(root)


def test_pairing_recovers_cartan_entries(b2):
    for i in b2.nodes:
        for j in b2.nodes:
            assert b2.pairing(b2.simple_root_weight(i), b2.simple_root(j)) == b2.a[i - 1][j - 1]


def test_components_and_highest_roots():
    rs = root_system("A2xA1")
    assert rs.components() == [(1, 2), (3,)]
    assert rs.highest_root((1, 2)) == (1, 1, 0)
    assert root_system("G2").highest_root((1, 2)) == (3, 2)


def test_cartan_matrix_from_json():
    rs = build_root_system(parse_algebra("[[2,-1],[-1,2]]"))
    assert rs.rank == 2
    assert len(rs.positive_roots) == 3


@pytest.mark.parametrize("text", [
    "Z3",
    "B1",
    "G3",
    "",
    "[[2,-2],[-2,2]]",
    "[[2,1],[1,2]]",
    "[[2,-1],[0,2]]",
    "[[2,-1],[-1]]",
    "[[2,-1],[-1,2.5]]",
    "[[2,-1]",
])
def test_invalid_algebra(text):
    with pytest.raises(CartanError) as exc:
        parse_algebra(text)
    assert exc.value.flag == "--algebra"
    assert exc.value.diagnostic().startswith("--algebra: ")


def test_format_weight():
    assert format_weight((1, -2, 1)) == "(1,-2,1)"
    assert format_weight((Fraction(1, 2), 0)) == "(1/2,0)"


@pytest.mark.parametrize("label, sigma, expected", [
    ("A3", (), "o—o—o"),
    ("A3", (1,), "x—o—o"),
    ("B2", (2,), "o=x"),
    ("G2", (), "o≡o"),
    ("A2xA1", (3,), "o—o × x"),
])
def test_dynkin_ascii(label, sigma, expected):
    assert dynkin_ascii(root_system(label), sigma) == expected


# ========== INVARIANTES ==========

@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_killing_form_is_weyl_invariant(label, rng):
    rs = root_system(label)
    for _ in range(1000):
        weight = random_rational_weight(rng, rs)
        i = rng.choice(list(rs.nodes))
        assert rs.norm_sq(rs.reflect_weight(i, weight)) == rs.norm_sq(weight)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2", "A2xA1"])
def test_roots_closed_under_reflections(label):
    rs = root_system(label)
    roots = list(rs.positive_roots) + [tuple(-c for c in r) for r in rs.positive_roots]
    for root in roots:
        for i in rs.nodes:
            assert rs.is_root(rs.reflect_root(i, root))
    for i in rs.nodes:
        assert rs.reflect_root(i, rs.simple_root(i)) == tuple(-c for c in rs.simple_root(i))


@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_killing_form_is_positive_definite(label, rng):
    rs = root_system(label)
    for _ in range(200):
        weight = random_rational_weight(rng, rs)
        if any(weight):
            assert rs.norm_sq(weight) > 0
