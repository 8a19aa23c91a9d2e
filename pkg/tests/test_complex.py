"""Complexo relativo explícito C_*(q+/p+, V) e o relatório de verificação."""

import pytest

from relbgg import linalg
from relbgg.chevalley import build_chevalley, codifferential, cohomology_differential, relative_complex, verify_relative
from relbgg.chevalley.complex import DUALITY_SIGN, sort_with_sign
from relbgg.errors import ChainSizeExceeded
from relbgg.homology import homology_dimensions
from relbgg.parabolic import make_pair

from tests.conftest import root_system

RELATIVE_CHECKS = [
    "representation",
    "casimir",
    "complex",
    "equivariance",
    "hodge",
    "homology-dimensions",
    "laplacian-isotypic",
    "casimir-formula",
    "grading",
    "homotopy-formula",
]


def test_sort_with_sign():
    assert sort_with_sign((2, 0, 1)) == ((0, 1, 2), 1)
    assert sort_with_sign((1, 0)) == ((0, 1), -1)
    assert sort_with_sign((1, 1))[0] is None


def test_duality_sign():
    assert DUALITY_SIGN == -1


def test_trivial_coefficients(a3, a3_pair):
    cx = relative_complex((0, 0, 0), a3_pair, build_chevalley(a3))
    assert [cx.chain_dim(k) for k in cx.degrees] == [1, 2, 1]
    assert linalg.is_zero(codifferential(1, cx))
    assert linalg.is_zero(codifferential(2, cx))
    assert cx.homology_dims() == {0: 1, 1: 2, 2: 1}
    assert cx.cohomology_dims() == {0: 1, 1: 2, 2: 1}


def test_transported_differential_shapes(a3, a3_pair):
    cx = relative_complex((1, 0, 0), a3_pair, build_chevalley(a3))
    assert cohomology_differential(0, cx).shape == (cx.chain_dim(1), cx.chain_dim(0))
    assert cohomology_differential(-1, cx).shape == (cx.chain_dim(0), 0)


@pytest.mark.parametrize("label, sigma_p, sigma_q, weight", [
    ("A2", {1}, {1, 2}, (0, 0)),
    ("A2", {1}, {1, 2}, (1, 0)),
    ("A2", {1}, {1, 2}, (1, 1)),
    ("A3", {1}, {1, 2}, (0, 0, 0)),
    ("A3", {1}, {1, 2}, (1, 0, 0)),
])
def test_relative_verification(label, sigma_p, sigma_q, weight):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    cb = build_chevalley(rs)
    cx = relative_complex(weight, pair, cb)
    report = verify_relative(weight, pair, cb, cx)
    assert [c.name for c in report.checks] == RELATIVE_CHECKS
    assert report.ok, report.to_dict()
    expected = homology_dimensions(weight, pair, rs)
    assert cx.homology_dims() == {k: expected.get(k, 0) for k in cx.degrees}


@pytest.mark.slow
@pytest.mark.parametrize("label, sigma_p, sigma_q, weight", [
    ("B2", {1}, {1, 2}, (0, 1)),
    ("A3", {2}, {1, 2, 3}, (1, -1, 1)),
    ("A2xA1", {3}, {1, 3}, (0, 1, 1)),
])
def test_relative_verification_more_types(label, sigma_p, sigma_q, weight):
    rs = root_system(label)
    pair = make_pair(sigma_p, sigma_q, rs)
    assert verify_relative(weight, pair, build_chevalley(rs)).ok


def test_report_serialization(a2):
    pair = make_pair({1}, {1, 2}, a2)
    report = verify_relative((0, 0), pair, build_chevalley(a2))
    data = report.to_dict()
    assert data["instance"] == {"kind": "relative", "algebra": "A2", "sigma_p": [1], "sigma_q": [1, 2], "lambda": [0, 0]}
    assert data["ok"] is True
    assert {c["status"] for c in data["checks"]} == {"pass"}
    assert report.get("hodge").ok
    assert report.get("inexistente") is None


def test_chain_size_cap(a3, a3_pair, monkeypatch):
    monkeypatch.setenv("RELBGG_MAX_CHAIN_DIM", "4")
    with pytest.raises(ChainSizeExceeded):
        relative_complex((0, 1, 0), a3_pair, build_chevalley(a3))
