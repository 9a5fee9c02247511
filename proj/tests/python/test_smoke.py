"""Smoke tests for the Python bindings against values pinned by the C++ suites."""

import math

import pytest

import groverlab as gl

PI = math.pi


def test_phase_set_exponentials():
    ph = gl.PhaseSet(PI, 0.0, PI, 0.0)
    assert ph.alpha == pytest.approx(-1.0 + 0.0j, abs=1e-15)
    assert ph.beta == 1.0 + 0.0j
    assert gl.matching_defect(ph) == 0.0
    assert gl.is_matched(ph)


def test_phase_normalization_and_errors():
    ph = gl.PhaseSet(-PI / 2.0, 0.0, 0.0, 0.0)
    assert ph.theta1 == pytest.approx(1.5 * PI)
    with pytest.raises(Exception):
        gl.PhaseSet(float("nan"), 0.0, 0.0, 0.0)
    with pytest.raises(Exception):
        gl.ProblemSpec(4, 0)


def test_reflection_kernel_n4():
    ph = gl.PhaseSet(PI, 0.0, PI, 0.0)
    spec = gl.ProblemSpec(4, 1)
    k = gl.build_kernel(ph, spec)
    assert k.g[0][0] == pytest.approx(0.5, abs=1e-12)
    assert k.g[0][1] == pytest.approx(math.sqrt(3.0) / 2.0, abs=1e-12)
    assert k.g[1][0] == pytest.approx(-math.sqrt(3.0) / 2.0, abs=1e-12)
    assert abs(k.det - ph.alpha * ph.beta * ph.gamma * ph.delta) < 1e-12

    eig = gl.eigensystem(k)
    assert eig.lambda1 == pytest.approx(PI / 3.0, abs=1e-12)
    assert eig.delta_lambda == pytest.approx(2.0 * PI / 3.0, abs=1e-12)
    assert not eig.degenerate

    assert gl.evolve_probability(ph, spec, 0) == 0.25
    assert gl.evolve_probability(ph, spec, 1) == pytest.approx(1.0, abs=1e-12)


def test_presets_and_sweep():
    phases, spec, m_max = gl.figure_preset("fig3")
    assert spec.n_total == 1000 and spec.m_marked == 10 and m_max == 25
    points, peaks = gl.sweep(phases, spec, m_max)
    assert points[0] == (0, 0.01)
    assert peaks[0][0] == 7
    assert peaks[0][1] >= 0.99

    fig1_phases, _, _ = gl.figure_preset("fig1")
    assert gl.matching_defect(fig1_phases) == pytest.approx(2.0 * abs(math.sin(1.5)), abs=1e-12)

    with pytest.raises(Exception):
        gl.figure_preset("fig9")


def test_predicted_peak_and_alignment():
    phases, spec, _ = gl.figure_preset("fig2")
    assert gl.predicted_peak_m(phases, spec) == pytest.approx(50.204162333337, abs=1e-6)
    overlap_w, product = gl.g1_alignment(phases, spec)
    assert 0.44 < product < 0.56
    with pytest.raises(Exception):
        gl.predicted_peak_m(gl.figure_preset("fig1")[0], spec)


def test_full_oracle_and_cross_validation():
    ph = gl.PhaseSet(1.7 * PI, 0.7 * PI, 1.9 * PI, 0.9 * PI)
    spec = gl.ProblemSpec(1000, 10)
    series = gl.run_full(1000, list(range(10)), ph, 25)
    assert len(series) == 26
    assert series[7] == pytest.approx(0.9953444003575985, abs=1e-9)

    report = gl.cross_validate(ph, spec, m_max=100)
    assert report["pass"]
    assert report["max_abs_diff"] <= 1e-10
    assert abs(report["trace_computed"] - report["trace_closed_form"]) < 1e-12
    assert abs(report["trace_computed"] - report["trace_sign_variant"]) == pytest.approx(
        2.0, abs=1e-12
    )


def test_spectral_matches_iterative():
    ph = gl.PhaseSet(0.3, 2.1, 5.0, 1.2)
    spec = gl.ProblemSpec(2048, 17)
    for m in (0, 1, 50, 500):
        assert gl.spectral_probability(ph, spec, m) == pytest.approx(
            gl.evolve_probability(ph, spec, m), abs=1e-10
        )
