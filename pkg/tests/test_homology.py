"""Testes de relbgg.homology: homologia relativa, Kostant e a tabela fatorada."""

from collections import Counter

import pytest

from relbgg import homology, oracle, weyl
from relbgg.errors import WeightError
from relbgg.parabolic import delta_p, is_dominant, make_pair, relative_hasse
from relbgg.rootsys import delta

from tests.conftest import SAMPLED_PAIRS, random_weight, root_system


def rows(entries):
    return [(e.degree, weyl.word_string(e.weyl_word), e.nu) for e in entries]


def test_relative_homology_trivial_coefficients(a3, a3_pair):
    entries = homology.relative_homology((0, 0, 0), a3_pair, a3)
    assert rows(entries) == [
        (0, "e", (0, 0, 0)),
        (1, "s2", (1, -2, 1)),
        (2, "s2 s3", (2, -3, 0)),
    ]
    assert all(e.laplacian_gap == 0 for e in entries)


def test_relative_homology_closed_form(a3, a3_pair, rng):
    for _ in range(100):
        a, b, c = rng.randint(-10, 10), rng.randint(0, 10), rng.randint(0, 10)
        entries = homology.relative_homology((a, b, c), a3_pair, a3)
        assert [e.nu for e in entries] == [
            (a, b, c),
            (a + b + 1, -b - 2, b + c + 1),
            (a + b + c + 2, -b - c - 3, b),
        ]


def test_kostant_for_maximal_parabolic(a3, rng):
    for _ in range(100):
        a, b, c = (rng.randint(0, 10) for _ in range(3))
        entries = homology.absolute_homology((a, b, c), {1}, a3)
        assert [e.nu for e in entries] == [
            (a, b, c),
            (-a - 2, a + b + 1, c),
            (-a - b - 3, a, b + c + 1),
            (-a - b - c - 4, a, b),
        ]
        assert [e.degree for e in entries] == [0, 1, 2, 3]


def test_kostant_count(a3):
    assert len(homology.absolute_homology((1, 0, 0), {1, 2}, a3)) == 12


def test_degenerate_pairs(a3):
    only = homology.absolute_homology((1, 1, 0), (), a3)
    assert rows(only) == [(0, "e", (1, 1, 0))]
    same = homology.relative_homology((-2, 1, 0), make_pair({1}, {1}, a3), a3)
    assert rows(same) == [(0, "e", (-2, 1, 0))]


def test_factorized_degree_counts(a3, a3_pair):
    table = homology.factorized_homology((0, 0, 0), a3_pair, a3)
    assert table.degree_counts() == [1, 2, 3, 3, 2, 1]
    assert [e.nu for e in table.entries[(0, 0)]] == [(0, 0, 0)]
    assert set(table.entries) == {(i, j) for i in range(3) for j in range(4)}


@pytest.mark.parametrize("label, sigma_p, sigma_q, weight", [
    ("A3", {1}, {1, 2}, (1, 0, 0)),
    ("A3", {2}, {1, 2, 3}, (0, 1, 1)),
    ("B2", {1}, {1, 2}, (1, 1)),
    ("G2", {2}, {1, 2}, (0, 1)),
    ("A2xA1", {3}, {1, 3}, (1, 0, 2)),
])
def test_factorized_matches_kostant(label, sigma_p, sigma_q, weight):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    table = homology.factorized_homology(weight, pair, rs)
    flat = Counter((k, e.nu) for k, items in table.flatten().items() for e in items)
    kostant = Counter((e.degree, e.nu) for e in homology.absolute_homology(weight, sigma_q, rs))
    assert flat == kostant


@pytest.mark.parametrize("label, sigma_p, sigma_q", SAMPLED_PAIRS)
def test_factorized_matches_kostant_on_random_weights(label, sigma_p, sigma_q, rng):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    for _ in range(10):
        weight = random_weight(rng, rs, high=5)
        table = homology.factorized_homology(weight, pair, rs)
        flat = Counter((k, e.nu) for k, items in table.flatten().items() for e in items)
        kostant = Counter((e.degree, e.nu) for e in homology.absolute_homology(weight, sigma_q, rs))
        assert flat == kostant


def test_laplacian_scalar_vanishes_on_orbit(a3, a3_pair):
    assert homology.laplacian_scalar((0, 0, 0), (0, 0, 0), a3_pair, a3) == 0
    assert homology.laplacian_scalar((0, 0, 0), (1, -2, 1), a3_pair, a3) == 0


def test_laplacian_scalar_positive_off_orbit(a3, a3_pair):
    # -nu = alpha_2 + alpha_3 é peso de Λ^1, fora da órbita
    assert homology.laplacian_scalar((0, 0, 0), (1, -1, -1), a3_pair, a3) > 0


@pytest.mark.parametrize("label, sigma_p, sigma_q, weight", [
    ("A3", {1}, {1, 2}, (0, 0, 0)),
    ("A3", {1}, {1, 2}, (-1, 1, 0)),
    ("A3", {2}, {1, 2, 3}, (1, -3, 1)),
    ("B2", {1}, {1, 2}, (-2, 1)),
])
def test_laplacian_scalar_strictly_positive_for_chain_weights(label, sigma_p, sigma_q, weight):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    orbit = {e.nu for e in homology.relative_homology(weight, pair, rs)}
    for k in range(len(pair.sigma_q) * 10):
        weights = oracle.chain_weights(k, weight, pair, rs)
        if not weights:
            break
        for mu in weights:
            nu = tuple(-x for x in mu)
            if nu in orbit or not is_dominant(nu, sigma_q):
                continue
            assert homology.laplacian_scalar(weight, nu, pair, rs) > 0


def test_singular_patterns(a3, a3_pair, rng):
    for _ in range(100):
        a, b = rng.randint(0, 10), rng.randint(0, 10)
        _check_singular_patterns(a3, a3_pair, a, b)


def _check_singular_patterns(a3, a3_pair, a, b):
    first = homology.singular_patterns((-1, a, b), a3_pair, a3)
    assert first.walls == [(1, 0, 0)]
    assert [e.nu for e in first.entries] == [(-1, a, b), (a, -a - 2, a + b + 1), (a + b + 1, -a - b - 3, a)]

    second = homology.singular_patterns((-a - 2, a, b), a3_pair, a3)
    assert second.walls == [(1, 1, 0)]
    assert [e.nu for e in second.entries] == [(-a - 2, a, b), (-1, -a - 2, a + b + 1), (b, -a - b - 3, a)]

    third = homology.singular_patterns((-a - b - 3, a, b), a3_pair, a3)
    assert third.walls == [(1, 1, 1)]
    assert [e.nu for e in third.entries] == [(-a - b - 3, a, b), (-b - 2, -a - 2, a + b + 1), (-1, -a - b - 3, a)]


def test_homology_dimensions(a3, a3_pair):
    assert homology.homology_dimensions((0, 0, 0), a3_pair, a3) == {0: 1, 1: 2, 2: 1}


def test_degree_counts_of_relative_orbit(a3, a3_pair):
    entries = homology.relative_homology((0, 0, 0), a3_pair, a3)
    assert homology.degree_counts(entries) == [1, 1, 1]
    assert len(entries) == len(relative_hasse(a3_pair, a3))


@pytest.mark.parametrize("weight", [(0, -1, 0), (1, 0), (0, 1, 2, 3)])
def test_weight_validation(a3, a3_pair, weight):
    with pytest.raises(WeightError) as exc:
        homology.relative_homology(weight, a3_pair, a3)
    assert exc.value.flag == "--lambda"


def test_non_integral_weight(a3, a3_pair):
    from fractions import Fraction

    with pytest.raises(WeightError):
        homology.relative_homology((Fraction(1, 2), 0, 0), a3_pair, a3)


def test_absolute_homology_requires_dominant_weight(a3):
    with pytest.raises(WeightError):
        homology.absolute_homology((-1, 0, 0), {1}, a3)


@pytest.mark.parametrize("label, sigma_p, sigma_q", SAMPLED_PAIRS)
def test_relative_shift_agrees_with_absolute_shift(label, sigma_p, sigma_q, rng):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    for _ in range(20):
        weight = random_weight(rng, rs, sigma_p, low=-6, high=6)
        for w in relative_hasse(pair, rs):
            assert weyl.affine_action(w, weight, delta(rs)) == weyl.affine_action(w, weight, delta_p(pair, rs))
