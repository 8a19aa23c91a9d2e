"""Testes da base de Chevalley e das irredutíveis explícitas."""

from collections import Counter

import pytest

from relbgg import linalg
from relbgg.chevalley import build_chevalley, build_irrep
from relbgg.chevalley.checks import casimir_check, representation_check
from relbgg.chevalley.irrep import casimir_operator, levi_basis
from relbgg.errors import WeightError
from relbgg.oracle import freudenthal, weyl_dimension
from relbgg.rootsys import neg_weight

from tests.conftest import random_weight, root_system


@pytest.mark.parametrize("label, dim", [("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14), ("A2xA1", 11)])
def test_basis_dimension(label, dim):
    assert build_chevalley(root_system(label)).dim == dim


@pytest.mark.parametrize("label", ["A2", "A3", "B2", "G2"])
def test_jacobi(label):
    assert build_chevalley(root_system(label)).jacobi_violations() == []


def test_simple_brackets(a2):
    cb = build_chevalley(a2)
    for i in a2.nodes:
        alpha = a2.simple_root(i)
        assert cb.bracket(cb.e(alpha), cb.f(alpha)) == {cb.h(i): 1}
    assert cb.structure_constant((1, 0), (0, 1)) in (1, -1)
    assert cb.structure_constant((1, 0), (1, 1)) == 0


def test_structure_constants_are_root_strings(b2):
    # |N_{alpha,beta}| = p + 1, com p o maior inteiro tal que beta - p alpha é raiz
    cb = build_chevalley(b2)
    for alpha in b2.positive_roots:
        for beta in b2.positive_roots:
            gamma = tuple(a + b for a, b in zip(alpha, beta))
            if not b2.is_root(gamma):
                continue
            p = 0
            while b2.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
                p += 1
            assert abs(cb.structure_constant(alpha, beta)) == p + 1


def test_killing_form_on_cartan(b2):
    cb = build_chevalley(b2)
    for i in b2.nodes:
        for j in b2.nodes:
            assert cb.killing_form(cb.h(i), cb.h(j)) == b2.coroot_killing[i - 1][j - 1]


def test_labels(a2):
    cb = build_chevalley(a2)
    assert cb.label(cb.e((1, 1))) == "e(1,1)"
    assert cb.label(cb.f((0, 1))) == "f(0,1)"
    assert cb.label(cb.h(2)) == "h2"


@pytest.mark.parametrize("label, weight, levi_sigma", [
    ("A2", (1, 0), ()),
    ("A2", (1, 1), ()),
    ("B2", (0, 1), ()),
    ("A3", (0, 1, 0), {1}),
    ("A3", (-2, 1, 1), {1}),
    ("B2", (3, 1), {1}),
])
def test_irrep(label, weight, levi_sigma):
    rs = root_system(label)
    cb = build_chevalley(rs)
    rep = build_irrep(weight, levi_sigma, cb)
    assert rep.dim == weyl_dimension(weight, levi_sigma, rs)
    assert representation_check(rep, cb).ok
    assert casimir_check(rep, cb, levi_sigma, weight).ok


def test_irrep_has_lowest_weight_minus_lambda(a3):
    cb = build_chevalley(a3)
    rep = build_irrep((1, 0, 0), (), cb)
    assert (-1, 0, 0) in rep.weights
    assert (1, 0, 0) not in rep.weights
    assert (0, 0, 1) in rep.weights


def test_pplus_acts_by_zero(a3):
    cb = build_chevalley(a3)
    rep = build_irrep((0, 1, 0), {1}, cb)
    for root in a3.positive_roots:
        if root[0]:
            assert linalg.is_zero(rep.action(cb.e(root)))
            assert not rep.defines(cb.f(root))


def test_casimir_of_adjoint(a2):
    # No adjunto, o Casimir da forma de Killing age por 1
    cb = build_chevalley(a2)
    rep = build_irrep((1, 1), (), cb)
    casimir = casimir_operator(rep, cb, levi_basis(cb, ()))
    assert linalg.equal(casimir, linalg.identity(rep.dim))


def test_irrep_rejects_non_dominant(a2):
    with pytest.raises(WeightError):
        build_irrep((0, -1), (), build_chevalley(a2))


# Álgebra, nós cruzados do Levi e maior coordenada sorteada
IRREP_SAMPLES = [("A2", (), 2), ("B2", (), 1), ("A3", (), 1), ("A3", (1,), 2), ("B2", (1,), 3), ("G2", (2,), 3)]


def test_irrep_weights_match_freudenthal(rng):
    for _ in range(20):
        label, levi_sigma, high = rng.choice(IRREP_SAMPLES)
        rs = root_system(label)
        weight = random_weight(rng, rs, levi_sigma, low=-high, high=high)
        rep = build_irrep(weight, levi_sigma, build_chevalley(rs))
        # V tem peso mínimo -lambda: seus pesos são os negativos dos do módulo de peso máximo
        assert Counter(neg_weight(w) for w in rep.weights) == Counter(freudenthal(weight, levi_sigma, rs))
