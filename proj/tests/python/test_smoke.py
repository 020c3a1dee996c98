import cmath
import math

import pytest

import orbitframe as of


def test_rho_and_mobius():
    assert of.rho(0.5, 0.5) == 0.0
    assert abs(of.rho(0, 0.3) - 0.3) < 1e-15
    z = 0.2 + 0.1j
    assert abs(of.mobius(0.4j, of.mobius(0.4j, z)) - z) < 1e-14


def test_gram_is_hermitian_with_unit_diagonal():
    g = of.gram([0.1, 0.5j, -0.3 + 0.2j])
    for j in range(3):
        assert abs(g[j][j] - 1) < 1e-14
        for k in range(3):
            assert abs(g[j][k] - g[k][j].conjugate()) < 1e-14


def test_radial_riesz_bounds():
    pts = [1 - 2.0**-j for j in range(1, 17)]
    lo, hi = of.riesz_bounds(pts)
    assert abs(lo - 4.145985595030972e-05) < 1e-12
    assert hi > 1


def test_single_point_certificate():
    c = of.certify([0.3])
    assert c["verdict"] == "certified_frame"
    assert abs(c["lower_bound"] - 0.5) < 1e-12


def test_rank_deficient_pair_is_not_a_frame():
    a = [[1 / math.sqrt(2)] * 2, [1 / math.sqrt(2)] * 2]
    c = of.certify([0.4, 0.4], a)
    assert c["verdict"] == "certified_not_frame"
    lo, _ = of.exact_frame_bounds([0.4, 0.4], a)
    assert lo < 1e-12


def test_decompose_pairs():
    pts = []
    for k in range(4):
        c = 0.6 * cmath.exp(2j * math.pi * k / 4)
        pts += [c, of.mobius(c, 1e-4)]
    layers = of.decompose(pts, 2)
    assert [l["p"] for l in layers] == [2]
    assert sorted(i for l in layers for c in l["clusters"] for i in c) == list(range(8))


def test_generate_round_trip_and_analyze():
    for name in of.generators():
        text = of.generate(name, 12, 2, 5)
        assert of.canonical(text) == text
    report = of.analyze(of.generate("radial", 8, 1, 3))
    assert report["command"] == "analyze"
    assert report["instance"]["J"] == 8


def test_parse_error():
    with pytest.raises(of.ParseError):
        of.canonical('{"eigenvalues": [')
