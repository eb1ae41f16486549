"""Fractional Riemann-Liouville operators in two independent realizations.

Order convention: ``mu > 0`` is a derivative, ``mu < 0`` an integral of order
``|mu|``, ``mu = 0`` the identity.  LEFT operators look backward (integrate
from -inf), RIGHT operators forward.

Realizations:

* spectral -- Fourier multiplier ``(+-2 pi i xi)^mu`` on the periodic model;
  the precision path, restricted to ``|mu| < 1``.
* Grunwald-Letnikov -- time-domain convolution with generalized binomial
  weights, first-order accurate in dx; the structural oracle.  The signal is
  zero-extended beyond the grid on the unbounded side, which is exact for
  compactly supported / rapidly decaying inputs.

Note on the spectral integral (``mu < 0``): the zero-frequency symbol
diverges in the continuum; discretely the DC bin is set to 0, so callers
either feed near-zero-mean signals or accept the DC loss.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateOrderError, OrderRangeError
from .fourier import apply_multiplier, dft_forward, dft_inverse, power_symbol
from .grids import SampledSignal, Side, inner_product

__all__ = [
    "GLWeights",
    "gl_weights",
    "apply_spectral",
    "apply_grunwald",
    "adjoint_defect",
]


@dataclass(frozen=True, eq=False)
class GLWeights:
    """Grunwald-Letnikov weights ``w_k = (-1)^k binom(mu, k)``.

    Computed by the stable recurrence ``w_0 = 1, w_k = w_{k-1} (k-1-mu)/k``.
    For ``0 < mu < 1`` every ``w_k`` with ``k >= 1`` is negative and the
    partial sums decrease monotonically to 0 from above.
    """

    mu: float
    w: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        ww = np.ascontiguousarray(self.w, dtype=np.float64)
        ww.setflags(write=False)
        object.__setattr__(self, "w", ww)


def _check_gl_order(mu: float) -> float:
    mu = float(mu)
    if mu == 0.0:
        raise DegenerateOrderError("Grunwald-Letnikov scheme is undefined at order 0")
    if not (-1.0 < mu < 1.0):
        raise OrderRangeError(f"order must lie in (-1, 1), got {mu}")
    return mu


def gl_weights(mu: float, m: int) -> GLWeights:
    """First ``m+1`` weights of the generalized binomial expansion."""
    mu = _check_gl_order(mu)
    if m < 1:
        raise OrderRangeError(f"need m >= 1 weights, got m={m}")
    k = np.arange(1, m + 1, dtype=np.float64)
    w = np.concatenate(([1.0], np.cumprod((k - 1.0 - mu) / k)))
    return GLWeights(mu, w)


def apply_spectral(a: SampledSignal, order: float, side: Side) -> SampledSignal:
    """Multiplier realization: dft -> ``(+-2 pi i xi)^order`` -> inverse dft.

    Linear in ``a``; order 0 is the identity up to Nyquist zeroing.
    """
    order = float(order)
    if not abs(order) < 1.0:
        raise OrderRangeError(
            f"spectral path supports |order| < 1, got {order}"
        )
    spec = apply_multiplier(dft_forward(a), power_symbol(order, side, a.grid))
    return dft_inverse(spec)


def apply_grunwald(a: SampledSignal, order: float, side: Side) -> SampledSignal:
    """Grunwald-Letnikov realization, O(dx) accurate on smooth decaying input.

    LEFT:  ``out_j = dx^{-mu} sum_{k=0..j}     w_k a_{j-k}``
    RIGHT: ``out_j = dx^{-mu} sum_{k=0..n-1-j} w_k a_{j+k}``
    """
    mu = _check_gl_order(order)
    n = a.grid.n
    w = gl_weights(mu, n - 1).w
    if side is Side.LEFT:
        conv = np.convolve(w, a.values)[:n]
    else:
        conv = np.convolve(w, a.values[::-1])[:n][::-1]
    return SampledSignal(a.grid, a.grid.dx ** (-mu) * conv)


def adjoint_defect(
    u: SampledSignal,
    w: SampledSignal,
    psi: SampledSignal,
    mu: float,
    side: Side = Side.LEFT,
) -> float:
    """Weak-derivative pairing defect ``|(u, D^{mu,other} psi) - (w, psi)|``.

    Small values certify that ``w`` is the weak mu-order fractional
    derivative of ``u`` on the given side: the derivative is moved onto the
    test function ``psi`` through the opposite-side operator.
    """
    mu = float(mu)
    if not (0.0 < mu < 1.0):
        raise OrderRangeError(f"weak derivative order must lie in (0, 1), got {mu}")
    u.grid.require_compatible(w.grid)
    u.grid.require_compatible(psi.grid)
    moved = apply_spectral(psi, mu, side.other)
    return abs(inner_product(u, moved) - inner_product(w, psi))
