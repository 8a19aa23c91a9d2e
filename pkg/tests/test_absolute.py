"""Complexo absoluto C_*(q+, V), filtração por grau em p+ e projeções nos níveis."""

import pytest

from relbgg.chevalley import absolute_complex, build_chevalley, verify, verify_absolute
from relbgg.chevalley.checks import filtration, pi_projection
from relbgg.homology import absolute_homology
from relbgg.oracle import weyl_dimension
from relbgg.parabolic import make_pair

from tests.conftest import root_system


@pytest.fixture(scope="module")
def a3_absolute():
    rs = root_system("A3")
    pair = make_pair({1}, {1, 2}, rs)
    cb = build_chevalley(rs)
    return rs, pair, cb


def test_bigrading(a3_absolute):
    rs, pair, cb = a3_absolute
    ax = absolute_complex((0, 0, 0), pair, cb)
    assert (ax.m, ax.r, ax.n) == (2, 3, 5)
    levels = filtration(0, ax)
    assert [len(levels[k]) for k in ax.degrees] == [1, 5, 10, 10, 5, 1]
    top = filtration(3, ax)
    assert [len(top[k]) for k in ax.degrees] == [0, 0, 0, 1, 2, 1]


@pytest.mark.parametrize("weight", [(0, 0, 0), (1, 0, 0)])
def test_absolute_verification(a3_absolute, weight):
    rs, pair, cb = a3_absolute
    report = verify_absolute(weight, pair, cb)
    assert report.ok, report.to_dict()
    names = [c.name for c in report.checks]
    for name in ("double-complex", "absolute-homology", "filtration", "projection-ranks", "projection-sign"):
        assert name in names
    projections = [c for c in report.checks if c.name.startswith("projection[")]
    assert len(projections) == 12
    # sinal fixado por bidegree, não globalmente
    signs = report.get("projection-sign").details["signs"]
    assert len(signs) == 12
    assert set(signs.values()) <= {-1, 0, 1}
    assert "0,0" in signs


def test_absolute_homology_matches_kostant(a3_absolute):
    rs, pair, cb = a3_absolute
    ax = absolute_complex((0, 0, 0), pair, cb)
    expected = {}
    for entry in absolute_homology((0, 0, 0), pair.sigma_q, rs):
        expected[entry.degree] = expected.get(entry.degree, 0) + weyl_dimension(entry.nu, pair.sigma_q, rs)
    assert ax.homology_dims() == {k: expected.get(k, 0) for k in ax.degrees}
    assert ax.homology_dims()[0] == 1


def test_single_projection(a3_absolute):
    rs, pair, cb = a3_absolute
    ax = absolute_complex((0, 0, 0), pair, cb)
    check = pi_projection(1, 1, ax)
    assert check.ok
    assert check.details["rank"] == check.details["target"]


def test_verify_skips_absolute_for_non_dominant(a3_absolute):
    rs, pair, cb = a3_absolute
    reports = verify((-1, 0, 0), pair, cb)
    assert [r.instance["kind"] for r in reports] == ["relative"]
    assert reports[0].ok
