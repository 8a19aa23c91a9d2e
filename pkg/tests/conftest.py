"""Fixtures compartilhadas: sistemas de raízes pequenos, pares parabólicos e amostras."""

import random
from fractions import Fraction

import pytest

from relbgg.parabolic import make_pair
from relbgg.rootsys import build_root_system, parse_algebra

# Pares usados nas verificações por amostragem
SAMPLED_PAIRS = [
    ("A3", {1}, {1, 2}),
    ("A3", {2}, {1, 2}),
    ("B2", {1}, {1, 2}),
]


def root_system(label: str):
    return build_root_system(parse_algebra(label))


def random_weight(rng: random.Random, rs, sigma=(), low: int = -4, high: int = 4):
    """Peso inteiro dominante nos nós fora de ``sigma``; livre nos cruzados."""
    crossed = set(sigma)
    return tuple(rng.randint(low, high) if i in crossed else rng.randint(0, high) for i in rs.nodes)


def random_rational_weight(rng: random.Random, rs):
    return tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in rs.nodes)


@pytest.fixture(scope="session")
def a2():
    return root_system("A2")


@pytest.fixture(scope="session")
def a3():
    return root_system("A3")


@pytest.fixture(scope="session")
def b2():
    return root_system("B2")


@pytest.fixture
def a3_pair(a3):
    """p com nó 1 cruzado, q com nós 1 e 2 cruzados."""
    return make_pair({1}, {1, 2}, a3)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(autouse=True)
def _clean_caps(monkeypatch):
    monkeypatch.delenv("RELBGG_ORBIT_CAP", raising=False)
    monkeypatch.delenv("RELBGG_MAX_CHAIN_DIM", raising=False)
