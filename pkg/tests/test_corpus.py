"""Corpus exactness plus quadrature re-derivation of the closed-form oracles."""

import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import gamma

import fracdecomp as fd
from fracdecomp.corpus import (
    Bump,
    Gaussian,
    GaussianDerivative,
    TaperedSine,
    oracle_pairs,
    sample,
    window_taper,
)


def test_bump_compact_support(grid):
    sig = sample(Bump(-1.0, 1.0), grid)
    outside = (grid.x <= -1.0) | (grid.x >= 1.0)
    assert np.all(sig.values[outside] == 0.0)
    assert np.max(sig.values) == pytest.approx(math.exp(-1.0), rel=1e-12)


def test_gaussian_peak(grid):
    sig = sample(Gaussian(0.0, 1.0), grid)
    j0 = grid.index_of_zero()
    assert sig.values[j0] == 1.0


def test_gaussian_derivative_zero_mean(grid):
    sig = sample(GaussianDerivative(0.0, 1.0), grid)
    assert abs(sig.mean_level()) <= 1e-14


def test_window_taper_flat_region(grid):
    t = window_taper(grid, 8.0)
    flat = (grid.x >= -12.0 + grid.dx) & (grid.x <= 12.0 - grid.dx)
    assert np.all(t[flat] == 1.0)
    assert t[0] == 0.0


def test_tapered_sine_mean_is_zero(grid):
    sig = sample(TaperedSine(1.0, 8.0), grid)
    assert abs(sig.mean_level()) <= 1e-13


def test_descriptor_registry_names():
    expected = {
        "gaussian",
        "gaussian_derivative",
        "gaussian_hat",
        "bump",
        "tapered_sine",
        "box",
        "triangle",
        "exp_left",
    }
    assert expected == set(fd.corpus.DESCRIPTORS)


def test_order_zero_maps_descriptor_to_itself(grid):
    sig = sample(GaussianDerivative(), grid)
    out = fd.apply_spectral(sig, 0.0, fd.Side.LEFT)
    assert np.max(np.abs(out.values - sig.values)) < 1e-12


def test_oracle_pairs_inventory():
    pairs = {p.name: p for p in oracle_pairs()}
    assert set(pairs) == {
        "exp_integral_half",
        "exp_derivative_half",
        "sine_derivative_half",
        "sine_integral_quarter",
    }
    assert not pairs["exp_integral_half"].spectral_ok
    assert pairs["sine_derivative_half"].spectral_ok


# -- quadrature re-derivation of the closed forms ---------------------------
#
# Left fractional integral of order sigma at x:
#   (1/Gamma(sigma)) int_0^inf t^{sigma-1} u(x - t) dt
# For u = sin(omega .) this splits into cos/sin moments of t^{sigma-1},
# integrated with the singular head on [0, 1] and an oscillatory-weight
# tail on [1, inf).


def _left_integral_of_sine(sigma, omega, x):
    def moment(weight):
        head = quad(
            lambda t: t ** (sigma - 1.0)
            * (math.cos(omega * t) if weight == "cos" else math.sin(omega * t)),
            0.0,
            1.0,
            limit=200,
        )[0]
        tail = quad(
            lambda t: t ** (sigma - 1.0), 1.0, np.inf, weight=weight, wvar=omega, limit=200
        )[0]
        return head + tail

    return (
        math.sin(omega * x) * moment("cos") - math.cos(omega * x) * moment("sin")
    ) / gamma(sigma)


def test_exp_eigenfunction_by_quadrature():
    # integral of order 1/2 fixes e^x
    for x in (-2.0, 0.5):
        val = quad(
            lambda t: t ** (-0.5) * math.exp(x - t), 0.0, 60.0, limit=400
        )[0] / gamma(0.5)
        assert val == pytest.approx(math.exp(x), rel=1e-8)


def test_sine_integral_quarter_by_quadrature():
    # D^{-1/4} sin(2x) = 2^{-1/4} sin(2x - pi/8): the amplitude shrinks
    sigma, omega = 0.25, 2.0
    for x in (0.3, 1.1):
        val = _left_integral_of_sine(sigma, omega, x)
        expected = omega ** (-sigma) * math.sin(omega * x - sigma * math.pi / 2.0)
        assert val == pytest.approx(expected, abs=1e-9)


def test_sine_derivative_half_by_quadrature():
    # D^{1/2} sin = d/dx D^{-1/2} sin, via central difference of the integral
    omega, mu = 1.0, 0.5
    sigma = 1.0 - mu
    h = 1e-5
    for x in (0.7, -0.4):
        val = (
            _left_integral_of_sine(sigma, omega, x + h)
            - _left_integral_of_sine(sigma, omega, x - h)
        ) / (2.0 * h)
        expected = omega**mu * math.sin(omega * x + mu * math.pi / 2.0)
        assert val == pytest.approx(expected, abs=1e-8)


def test_exp_pairs_against_grunwald():
    for pair in oracle_pairs():
        if pair.spectral_ok:
            continue
        out = fd.apply_grunwald(pair.input_signal(), pair.order, pair.side)
        assert pair.error(out) <= 5.0 * pair.grid.dx


def test_sine_pairs_against_spectral():
    for pair in oracle_pairs():
        if not pair.spectral_ok:
            continue
        out = fd.apply_spectral(pair.input_signal(), pair.order, pair.side)
        assert pair.error(out) <= 1e-6
