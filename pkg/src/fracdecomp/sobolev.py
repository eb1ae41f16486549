"""Spectral Sobolev seminorms/norms and a spectral-decay regularity probe.

The seminorm of order mu is ``|| |2 pi xi|^mu u_hat ||_L2``; the norm combines
it with the L2 norm in quadrature.  Membership in the order-t space is probed
by the fitted slope of ``log |u_hat|`` against ``log xi``: a signal with
spectral envelope ``xi^-alpha`` supports every ``t < alpha - 1/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import FitWindowError, OrderRangeError
from .fourier import dft_forward
from .grids import SampledSignal, l2_norm

__all__ = [
    "RegularityFit",
    "sobolev_seminorm",
    "sobolev_norm",
    "decay_exponent",
    "SUPERPOLYNOMIAL_EXPONENT",
]

# fitted slopes at or below this are reported as super-polynomial decay
SUPERPOLYNOMIAL_EXPONENT = -6.0

# spectral magnitudes below max|coeffs| * this are FFT noise, not signal
_NOISE_FLOOR = 1e-13

_MIN_WINDOW_BINS = 8
_MIN_FIT_POINTS = 4


@dataclass(frozen=True)
class RegularityFit:
    """Least-squares slope of log|u_hat| vs log xi over a frequency window."""

    exponent: float
    xi_lo: float
    xi_hi: float
    rms_fit_error: float

    def __post_init__(self) -> None:
        if not (0.0 < self.xi_lo < self.xi_hi):
            raise FitWindowError(
                f"need 0 < xi_lo < xi_hi, got ({self.xi_lo}, {self.xi_hi})"
            )
        if self.rms_fit_error < 0.0:
            raise FitWindowError("rms_fit_error must be nonnegative")

    @property
    def is_superpolynomial(self) -> bool:
        return self.exponent <= SUPERPOLYNOMIAL_EXPONENT


def sobolev_seminorm(u: SampledSignal, mu: float) -> float:
    """``sqrt(dxi * sum (|2 pi xi_k|^mu |u_hat(k)|)^2)``; mu = 0 gives the L2 norm."""
    mu = float(mu)
    if mu < 0.0:
        raise OrderRangeError(f"Sobolev order must be >= 0, got {mu}")
    spec = dft_forward(u)
    weights = np.abs(2.0 * np.pi * u.grid.xi) ** mu  # 0^0 = 1 covers mu = 0
    return math.sqrt(
        u.grid.dxi * float(np.sum((weights * np.abs(spec.coeffs)) ** 2))
    )


def sobolev_norm(u: SampledSignal, mu: float) -> float:
    """``sqrt(||u||^2 + seminorm(u, mu)^2)``."""
    return math.sqrt(l2_norm(u) ** 2 + sobolev_seminorm(u, mu) ** 2)


def decay_exponent(u: SampledSignal, xi_lo: float, xi_hi: float) -> RegularityFit:
    """Fit the spectral decay exponent over ``xi in [xi_lo, xi_hi]``.

    Mirror bins +-k are averaged, the window is split into blocks and the
    per-block maximum is fitted, so oscillatory spectra (sinc zeros of box
    profiles) are measured by their envelope.  Bins below the FFT noise
    floor are discarded; a window with fewer than 8 bins, or too few
    above-floor blocks, raises FitWindowError.
    """
    grid = u.grid
    if not (0.0 < xi_lo < xi_hi < grid.nyquist):
        raise FitWindowError(
            f"fit window ({xi_lo}, {xi_hi}) must lie inside (0, {grid.nyquist})"
        )
    spec = dft_forward(u)
    z = grid.zero_bin_pos
    kmax = (grid.n - 1) // 2
    k = np.arange(1, kmax + 1)
    xi = k * grid.dxi
    moduli = 0.5 * (np.abs(spec.coeffs[z + k]) + np.abs(spec.coeffs[z - k]))
    sel = (xi >= xi_lo) & (xi <= xi_hi)
    if int(np.sum(sel)) < _MIN_WINDOW_BINS:
        raise FitWindowError(
            f"window ({xi_lo}, {xi_hi}) contains {int(np.sum(sel))} bins, need "
            f">= {_MIN_WINDOW_BINS}"
        )
    xi, moduli = xi[sel], moduli[sel]
    floor = float(np.max(np.abs(spec.coeffs))) * _NOISE_FLOOR

    n_blocks = max(_MIN_FIT_POINTS, min(32, len(xi) // 32))
    xs: list[float] = []
    ys: list[float] = []
    for block_xi, block_mod in zip(
        np.array_split(xi, n_blocks), np.array_split(moduli, n_blocks)
    ):
        if len(block_mod) == 0:
            continue
        i = int(np.argmax(block_mod))
        if block_mod[i] > floor:
            xs.append(float(block_xi[i]))
            ys.append(float(block_mod[i]))
    if len(xs) < _MIN_FIT_POINTS:
        raise FitWindowError(
            f"only {len(xs)} envelope points above the noise floor in "
            f"({xi_lo}, {xi_hi}); need >= {_MIN_FIT_POINTS}"
        )
    lx = np.log(xs)
    ly = np.log(ys)
    design = np.vstack([lx, np.ones_like(lx)]).T
    sol, *_ = np.linalg.lstsq(design, ly, rcond=None)
    rms = math.sqrt(float(np.mean((design @ sol - ly) ** 2)))
    return RegularityFit(float(sol[0]), xi_lo, xi_hi, rms)
