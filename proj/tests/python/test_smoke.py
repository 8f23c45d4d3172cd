"""Smoke tests for the python bindings: exact values over the wire."""

import pytest

import bmdist

BASE = [["1/3", "-1", "-1"], ["-1", "1/3", "-1"], ["-1", "-1", "1/3"]]
BASE_CANONICAL = [
    ["1/3", "-1/1", "-1/1"],
    ["-1/1", "1/3", "-1/1"],
    ["-1/1", "-1/1", "1/3"],
]
TRIANGLE = [["0", "2"], ["-3", "-1"], ["3", "-1"]]
SQUARE = [["1", "1"], ["-1", "1"], ["-1", "-1"], ["1", "-1"]]


def test_ratio_of_base_operator():
    assert bmdist.ratio(BASE) == "9/5"
    assert bmdist.inner_radius(BASE) == "5/9"
    assert bmdist.outer_radius(BASE) == "1/1"


def test_certify_and_witness():
    cert = bmdist.certify(BASE, "5/9")
    assert cert["certified"] is True
    assert cert["ratio"] == "9/5"
    bad = bmdist.certify(BASE, "3/5")
    assert bad["certified"] is False
    assert bad["inclusion"] == "inner"


def test_family_enumeration():
    family = bmdist.enumerate_nice_octahedra()
    assert len(family) == 192
    assert BASE_CANONICAL in family
    assert bmdist.is_nice(BASE)
    assert bmdist.is_nice(family[0])


def test_claim3d_occupancy():
    report = bmdist.claim3d(BASE)
    assert report["holds"] is True
    assert report["occupied"] == 6


def test_asymmetry_values():
    tri = bmdist.asymmetry(TRIANGLE)
    assert tri["as"] == "2/1"
    assert tri["center"] == ["0/1", "0/1"]
    assert tri["contacts"] == 3
    sq = bmdist.asymmetry(SQUARE)
    assert sq["as"] == "1/1"


def test_pentagon_family():
    vertices = bmdist.pentagon("9/5", "1/3")
    assert ["-2/1", "-4/3"] in vertices
    assert bmdist.pentagon_center("9/5", "1/3") == ["0/1", "-1/7"]
    assert bmdist.parallel_pair_ratio(vertices) == "4/9"
    cert = bmdist.certify_equidistance("9/5", "1/3", SQUARE)
    assert cert["certified"] is True
    assert cert["as"] == "9/5"
    with pytest.raises(ValueError):
        bmdist.pentagon("9/5", "1/2")


def test_lemma_helpers():
    par = bmdist.sample_valid_parallelogram(1, "5/9")
    counts = bmdist.corner_classify(par["p"], par["q"])
    assert counts["one_per_corner"] is True
    assert bmdist.check_square_sandwich(par["p"], par["q"], "5/9") is True
    found = bmdist.find_lemma_counterexample("1/2", 42)
    assert found is not None
    assert not bmdist.corner_classify(found["p"], found["q"])["one_per_corner"]


def test_search_round_trip():
    assert bmdist.float_ratio([[1.0, 1.0], [1.0, -1.0]]) == pytest.approx(1.0, abs=1e-12)
    assert bmdist.rationalize(0.5) == "1/2"
    report = bmdist.optimize(n=2, restarts=8, seed=1)
    assert report["exact_ratio"] == "1/1"
    snapped = bmdist.snap_to_nice([[1 / 3, -1.0, -1.0], [-1.0, 1 / 3, -1.0], [-1.0, -1.0, 1 / 3]])
    assert snapped == BASE_CANONICAL
