"""Smoke tests for the ppcorr extension module."""

import math

import pytest

import ppcorr


def test_version():
    assert ppcorr.__version__ == "0.1.0"


def test_g2_thermal_peak_and_dip():
    pair = ppcorr.make_pair("T", nbar=1.0)
    assert ppcorr.g2(pair, 0.0, 0.0) == pytest.approx(6.0, abs=1e-12)
    assert ppcorr.g2(pair, 0.0, math.pi) == pytest.approx(2.0, abs=1e-12)
    assert ppcorr.visibility(pair) == pytest.approx(0.5, abs=1e-12)


def test_pair_from_net_and_moments():
    pair = ppcorr.make_pair("PT", net=3.0)
    assert pair.source_b.nbar == pytest.approx(1.0, abs=1e-12)
    assert ppcorr.net_photon_number(pair.source_b) == pytest.approx(3.0)
    assert ppcorr.moment(pair.source_b, 1) == pytest.approx(3.0)
    assert ppcorr.moment(pair.source_b, 2) == pytest.approx(10.0)


def test_schwarz_witness():
    report = ppcorr.witness_report(ppcorr.make_pair("T", nbar=0.5))
    assert report.violated
    assert report.s_max.s.value == pytest.approx(49.0, rel=1e-12)
    divergent = ppcorr.schwarz_max(ppcorr.make_pair("C", nbar=0.5))
    assert divergent.s.infinite


def test_chsh_and_threshold():
    report = ppcorr.chsh_max(ppcorr.make_pair("QQ"))
    assert report.chsh_value == pytest.approx(2.0 * math.sqrt(2.0))
    assert report.violated
    assert ppcorr.bell_threshold(ppcorr.Pairing.T) == pytest.approx(
        math.sqrt(2.0) - 1.0, rel=1e-12
    )


def test_numeric_engine_matches_closed_form():
    pair = ppcorr.make_pair("PC", nbar=0.5)
    for k in range(4):
        dphi = k * math.pi / 3.0
        analytic = ppcorr.g2(pair, 0.0, dphi)
        numeric = ppcorr.g2_numeric(pair, 0.0, dphi)
        assert numeric == pytest.approx(analytic, rel=1e-9)


def test_verify_summary():
    summary = ppcorr.verify(pairings=["QQ", "T"], nbars=[0.5], dphi_count=4)
    assert summary["ok"]
    assert summary["max_deviation"] < 1e-9


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        ppcorr.make_pair("bogus", nbar=1.0)
    with pytest.raises(ppcorr.TruncationError):
        ppcorr.g2_numeric(ppcorr.make_pair("T", nbar=2.0), 0.0, 0.0, truncation=5)
