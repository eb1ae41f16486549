import math

import numpy as np
import pytest

import fracdecomp as fd
from fracdecomp.errors import (
    AlignmentError,
    DilationIncompatibleError,
    FracdecompError,
    GridMismatchError,
)

# closed forms: int exp(-2 pi x^2) dx = 2^-1/2, so ||exp(-pi x^2)||_2 = 2^-1/4
GAUSS_SELF_INNER = 0.7071067811865476
GAUSS_L2 = 0.8408964152537145


@pytest.fixture(scope="module")
def g10():
    return fd.UniformGrid.from_window(-10.0, 10.0, 2048)


def test_grid_validation():
    with pytest.raises(AlignmentError):
        fd.UniformGrid(0.0, -0.1, 16)
    with pytest.raises(AlignmentError):
        fd.UniformGrid(0.0, 0.1, 1)
    with pytest.raises(AlignmentError):
        fd.UniformGrid(math.nan, 0.1, 16)


def test_grid_layout(grid):
    assert grid.n == 4096
    assert grid.dx == pytest.approx(40.0 / 4096)
    assert grid.x[0] == -20.0
    assert grid.bins[grid.zero_bin_pos] == 0
    assert grid.bins[0] == -2047 and grid.bins[-1] == 2048
    assert grid.index_of_zero() == 2048
    assert not grid.is_symmetric()


def test_symmetric_grid(symmetric_grid):
    assert symmetric_grid.is_symmetric()
    assert symmetric_grid.index_of_zero() == 2048
    assert symmetric_grid.x[-1] == pytest.approx(20.0, abs=1e-13)


def test_signal_rejects_nonfinite(grid):
    values = np.zeros(grid.n)
    values[7] = np.nan
    with pytest.raises(FracdecompError):
        fd.SampledSignal(grid, values)
    values[7] = np.inf
    with pytest.raises(FracdecompError):
        fd.SampledSignal(grid, values)


def test_inner_product_zero(grid):
    z = fd.SampledSignal(grid, np.zeros(grid.n))
    assert fd.inner_product(z, z) == 0.0


def test_inner_product_gaussian(g10):
    f = fd.corpus.sample(fd.corpus.Gaussian(), g10)
    assert fd.inner_product(f, f) == pytest.approx(GAUSS_SELF_INNER, abs=1e-10)


def test_inner_product_symmetry(g10, rng):
    a = fd.SampledSignal(g10, rng.normal(size=g10.n))
    b = fd.SampledSignal(g10, rng.normal(size=g10.n))
    assert fd.inner_product(a, b) == fd.inner_product(b, a)


def test_inner_product_grid_mismatch(grid, g10):
    a = fd.SampledSignal(grid, np.zeros(grid.n))
    b = fd.SampledSignal(g10, np.zeros(g10.n))
    with pytest.raises(GridMismatchError):
        fd.inner_product(a, b)


def test_l2_norm(g10):
    f = fd.corpus.sample(fd.corpus.Gaussian(), g10)
    assert fd.l2_norm(f) == pytest.approx(GAUSS_L2, abs=1e-10)
    z = fd.SampledSignal(g10, np.zeros(g10.n))
    assert fd.l2_norm(z) == 0.0
    assert fd.l2_norm(-3.0 * f) == pytest.approx(3.0 * fd.l2_norm(f), rel=1e-15)


def test_translate(grid, gaussian_derivative, rng):
    a = gaussian_derivative
    assert np.array_equal(fd.translate(a, 0).values, a.values)
    assert np.array_equal(fd.translate(fd.translate(a, 3), -3).values, a.values)
    r = fd.SampledSignal(grid, rng.normal(size=grid.n))
    assert fd.l2_norm(fd.translate(r, 17)) == pytest.approx(fd.l2_norm(r), rel=1e-14)
    # circular convention: out_j = a_{(j-k) mod n}
    assert fd.translate(a, 5).values[5] == a.values[0]


def test_dilate_identity(gaussian):
    out = fd.dilate(gaussian, 1)
    assert np.array_equal(out.values, gaussian.values)
    assert out.grid.compatible(gaussian.grid)


def test_dilate_gaussian(grid, gaussian):
    out = fd.dilate(gaussian, 2)
    assert out.grid.n == grid.n // 2
    assert out.grid.x_min == grid.x_min / 2
    assert np.array_equal(out.values, gaussian.values[::2])
    # dx = 5/2^9 is exact binary, so re-indexed samples match exp(-pi (2x)^2)
    # evaluated on the output grid bit for bit
    expected = np.exp(-np.pi * (2.0 * out.grid.x) ** 2)
    assert np.max(np.abs(out.values - expected)) == 0.0


def test_dilate_errors(gaussian, symmetric_grid):
    with pytest.raises(DilationIncompatibleError):
        fd.dilate(gaussian, 3)  # 3 does not divide 4096
    off = fd.UniformGrid(0.05, 0.1, 16)  # no zero sample
    sig = fd.SampledSignal(off, np.ones(16))
    with pytest.raises(AlignmentError):
        fd.dilate(sig, 2)


def test_reflect(symmetric_grid):
    even = fd.corpus.sample(fd.corpus.Gaussian(), symmetric_grid)
    assert np.max(np.abs(fd.reflect(even).values - even.values)) < 1e-15
    odd = fd.corpus.sample(fd.corpus.GaussianDerivative(), symmetric_grid)
    assert np.max(np.abs(fd.reflect(odd).values + odd.values)) < 1e-15
    assert np.array_equal(fd.reflect(fd.reflect(odd)).values, odd.values)


def test_reflect_requires_symmetry(gaussian):
    with pytest.raises(AlignmentError):
        fd.reflect(gaussian)


def test_remove_mean(bump):
    out = fd.remove_mean(bump)
    assert abs(np.sum(out.values)) < 1e-12


def test_signal_values_are_immutable(gaussian):
    with pytest.raises(ValueError):
        gaussian.values[0] = 1.0


def test_signal_arithmetic(gaussian, gaussian_derivative):
    s = gaussian + 2.0 * gaussian_derivative
    assert np.array_equal(
        s.values, gaussian.values + 2.0 * gaussian_derivative.values
    )
    d = s - gaussian
    assert np.allclose(d.values, 2.0 * gaussian_derivative.values, rtol=0, atol=1e-15)
