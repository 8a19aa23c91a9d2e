"""Testes de relbgg.parabolic: partição de raízes, diagramas de Hasse e fatoração."""

from itertools import combinations

import pytest

from relbgg import weyl
from relbgg.errors import InclusionError, NotInHasse
from relbgg.parabolic import (
    delta_p,
    delta_qp,
    factorize,
    hasse,
    in_hasse,
    in_relative_hasse,
    is_dominant,
    levi_delta,
    levi_nodes,
    make_pair,
    partition,
    relative_hasse,
)

from tests.conftest import random_weight, root_system


def words(elements):
    return [weyl.word_string(w) for w in elements]


def nested_pairs(rs):
    nodes = list(rs.nodes)
    for size_q in range(len(nodes) + 1):
        for sigma_q in combinations(nodes, size_q):
            for size_p in range(size_q + 1):
                for sigma_p in combinations(sigma_q, size_p):
                    yield make_pair(sigma_p, sigma_q, rs)


def test_partition(a3, a3_pair):
    parts = partition(a3_pair, a3)
    assert parts.q0 == ((0, 0, 1),)
    assert parts.mid == ((0, 1, 0), (0, 1, 1))
    assert parts.pplus == ((1, 0, 0), (1, 1, 0), (1, 1, 1))


def test_pair_validation(a3):
    with pytest.raises(InclusionError) as exc:
        make_pair({2}, {1}, a3)
    assert exc.value.flag == "--p"
    with pytest.raises(InclusionError) as exc:
        make_pair(set(), {5}, a3)
    assert exc.value.flag == "--q"


def test_shifts(a3, a3_pair):
    assert delta_qp(a3_pair, a3) == (0, 1, 0)
    # delta do Levi de p (nós 2 e 3) é alpha_2 + alpha_3
    assert delta_p(a3_pair, a3) == (-1, 1, 1)
    assert levi_delta((), a3) == (1, 1, 1)


def test_relative_hasse(a3, a3_pair):
    elements = relative_hasse(a3_pair, a3)
    assert words(elements) == ["e", "s2", "s2 s3"]
    start = delta_qp(a3_pair, a3)
    points = [weyl.apply(weyl.inverse(w), start) for w in elements]
    assert points == [(0, 1, 0), (1, -1, 1), (1, 0, -1)]


def test_hasse_of_maximal_parabolic(a3):
    assert words(hasse({1}, a3)) == ["e", "s1", "s1 s2", "s1 s2 s3"]


def test_hasse_sizes(a3):
    assert len(hasse({1, 2}, a3)) == 12
    assert len(hasse({1, 2, 3}, a3)) == 24
    assert words(hasse((), a3)) == ["e"]


def test_relative_hasse_size_is_index_of_levi_groups(a3):
    assert len(relative_hasse(make_pair({2}, {1, 2}, a3), a3)) == 2
    assert len(relative_hasse(make_pair({1}, {1}, a3), a3)) == 1


def test_membership_predicates(a3, a3_pair):
    s3 = weyl.from_word([3], a3)
    assert not in_hasse(s3, a3_pair.sigma_q)
    assert not in_relative_hasse(weyl.from_word([1], a3), a3_pair)
    assert in_relative_hasse(weyl.from_word([2], a3), a3_pair)


def test_factorize_example(a3, a3_pair):
    w = weyl.from_word([2, 1], a3)
    w1, w2 = factorize(w, a3_pair, a3)
    assert words([w1, w2]) == ["s2", "s1"]


def test_factorize_rejects_outside_hasse(a3, a3_pair):
    with pytest.raises(NotInHasse):
        factorize(weyl.from_word([3], a3), a3_pair, a3)


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "B3", "C3", "G2", "A2xA1"])
def test_factorization_is_a_bijection(label):
    rs = root_system(label)
    for pair in nested_pairs(rs):
        big = hasse(pair.sigma_q, rs)
        rel = set(relative_hasse(pair, rs))
        small = set(hasse(pair.sigma_p, rs))
        factors = set()
        for w in big:
            w1, w2 = factorize(w, pair, rs)
            assert w1 in rel and w2 in small
            assert w1.length + w2.length == w.length
            factors.add((w1, w2))
        assert len(factors) == len(big) == len(rel) * len(small)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A4", "B4", "C4", "D4"])
def test_factorization_is_a_bijection_rank_four(label):
    test_factorization_is_a_bijection(label)


@pytest.mark.parametrize("label", ["A3", "B2", "G2"])
def test_relative_hasse_transports_dominance(label):
    rs = root_system(label)
    samples = [tuple((k + i) % 3 for i in rs.nodes) for k in range(3)]
    for pair in nested_pairs(rs):
        for w in relative_hasse(pair, rs):
            for base in samples:
                weight = tuple(-x - 1 if i in pair.sigma_p else x for i, x in zip(rs.nodes, base))
                assert is_dominant(weight, pair.sigma_p)
                assert is_dominant(weyl.apply(w, weight), pair.sigma_q)


# ========== CARACTERIZAÇÕES EXAUSTIVAS ==========

@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_relative_hasse_characterizations(label):
    rs = root_system(label)
    group = weyl.enumerate_group(rs)
    for pair in nested_pairs(rs):
        mid = set(partition(pair, rs).mid)
        uncrossed_p = levi_nodes(pair.sigma_p, rs)
        by_phi = {w for w in group if w.phi <= mid}
        by_cosets = {w for w in hasse(pair.sigma_q, rs) if weyl.is_in_subgroup(w, uncrossed_p)}
        assert set(relative_hasse(pair, rs)) == by_phi == by_cosets


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A4", "B4", "C4", "D4"])
def test_relative_hasse_characterizations_rank_four(label):
    test_relative_hasse_characterizations(label)


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "A2xA1"])
def test_stabilizer_of_relative_shift(label):
    rs = root_system(label)
    for pair in nested_pairs(rs):
        start = delta_qp(pair, rs)
        uncrossed_q = levi_nodes(pair.sigma_q, rs)
        for w in weyl.enumerate_group(rs, generators=levi_nodes(pair.sigma_p, rs)):
            assert (weyl.apply(w, start) == start) == weyl.is_in_subgroup(w, uncrossed_q)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["A4", "D4"])
def test_stabilizer_of_relative_shift_rank_four(label):
    test_stabilizer_of_relative_shift(label)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_dominance_transport_on_random_weights(label, rng):
    rs = root_system(label)
    for pair in nested_pairs(rs):
        elements = relative_hasse(pair, rs)
        for _ in range(10):
            weight = random_weight(rng, rs, pair.sigma_p, low=-6, high=6)
            for w in elements:
                assert is_dominant(weyl.apply(w, weight), pair.sigma_q)
                assert is_dominant(weyl.affine_action(w, weight, delta_p(pair, rs)), pair.sigma_q)
