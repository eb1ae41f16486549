"""Discrete Fourier transform with continuous-transform scaling.

Convention: the forward transform approximates ``F(u)(xi) = int e^{-2 pi i x xi}
u(x) dx`` by its rectangle-rule sum

    coeffs(k) = dx * sum_j u(x_j) exp(-2 pi i x_j xi_k),   xi_k = k/(n*dx),

over centered bins ``k = -ceil(n/2)+1 .. floor(n/2)``, and the inverse is the
matching Riemann sum ``dxi * sum_k coeffs(k) exp(+2 pi i x_j xi_k)``.  The pair
is an exact round trip, Plancherel/Parseval hold to rounding, and coefficient
values are directly comparable to closed-form continuous transforms (the
Gaussian ``exp(-pi x^2)`` maps to ``exp(-pi xi^2)``).

Complex power multipliers use the branch
``(+-2 pi i xi)^sigma = |2 pi xi|^sigma exp(+- sigma pi i sign(xi)/2)``,
built by mirroring the positive-frequency half so that conjugate reflection
``values(-k) = conj(values(k))`` is exact in floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FracdecompError, NotRealSignalError
from .grids import SampledSignal, Side, UniformGrid

__all__ = [
    "Spectrum",
    "MultiplierSymbol",
    "dft_forward",
    "dft_inverse",
    "power_symbol",
    "apply_multiplier",
]

# Hermitian defect (relative) below which a product spectrum is scrubbed
# back to exact symmetry; anything dirtier is left untouched.
_SCRUB_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Complex coefficients per centered frequency bin of the source grid."""

    grid: UniformGrid
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        c = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if c.shape != (self.grid.n,):
            raise FracdecompError(
                f"expected {self.grid.n} coefficients, got shape {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise FracdecompError("spectrum coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def xi(self) -> np.ndarray:
        return self.grid.xi

    def l2(self) -> float:
        """Spectral L2 norm ``sqrt(dxi * sum |coeffs|^2)``."""
        return math.sqrt(self.grid.dxi * float(np.sum(np.abs(self.coeffs) ** 2)))

    def inner(self, other: "Spectrum") -> complex:
        """Spectral pairing ``dxi * sum coeffs_a conj(coeffs_b)``."""
        self.grid.require_compatible(other.grid)
        return self.grid.dxi * complex(np.sum(self.coeffs * np.conj(other.coeffs)))

    def hermitian_defect(self) -> float:
        """Relative distance from ``coeffs(-k) = conj(coeffs(k))`` over paired bins."""
        z = self.grid.zero_bin_pos
        body = self.coeffs[: 2 * z + 1]
        anti = 0.5 * (body - np.conj(body[::-1]))
        scale = float(np.max(np.abs(self.coeffs)))
        if scale == 0.0:
            return 0.0
        return float(np.max(np.abs(anti))) / scale


@dataclass(frozen=True, eq=False)
class MultiplierSymbol:
    """Per-bin complex factor of a Fourier multiplier operator.

    ``singular_zero_bin`` marks symbols whose continuum value diverges at
    xi = 0 (negative powers); the stored k = 0 entry is then 0 and every
    consumer states its own regularization.
    """

    grid: UniformGrid
    values: np.ndarray = field(repr=False)
    order: float = 0.0
    variant: str = ""
    singular_zero_bin: bool = False
    conjugate_reflective: bool = True

    def __post_init__(self) -> None:
        v = np.ascontiguousarray(self.values, dtype=np.complex128)
        if v.shape != (self.grid.n,):
            raise FracdecompError(
                f"expected {self.grid.n} multiplier values, got shape {v.shape}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "values", v)


def dft_forward(a: SampledSignal) -> Spectrum:
    """Forward transform; O(n log n) via the FFT, any n >= 2."""
    g = a.grid
    raw = np.fft.fft(a.values)
    centered = raw[g.bins % g.n]
    phase = np.exp(-2j * np.pi * g.x_min * g.xi)
    return Spectrum(g, g.dx * phase * centered)


def dft_inverse(spectrum: Spectrum, imag_tol: float = 1e-9) -> SampledSignal:
    """Inverse transform onto a declared-real signal.

    The imaginary residue of the reconstruction (exactly the energy of the
    anti-Hermitian part of the spectrum) must stay below ``imag_tol``
    relative; it is then discarded.
    """
    g = spectrum.grid
    phase = np.exp(2j * np.pi * g.x_min * g.xi)
    raw = np.empty(g.n, dtype=np.complex128)
    raw[g.bins % g.n] = spectrum.coeffs * phase / g.dx
    vals = np.fft.ifft(raw)
    scale = math.sqrt(float(np.mean(np.abs(vals) ** 2)))
    if scale > 0.0:
        residue = math.sqrt(float(np.mean(vals.imag**2))) / scale
        if residue > imag_tol:
            raise NotRealSignalError(
                f"spectrum is not Hermitian-symmetric: imaginary residue "
                f"{residue:.3e} exceeds {imag_tol:.3e}"
            )
    return SampledSignal(g, vals.real.copy())


def power_symbol(sigma: float, side: Side, grid: UniformGrid) -> MultiplierSymbol:
    """Complex-power symbol ``(2 pi i xi)^sigma`` (LEFT) / ``(-2 pi i xi)^sigma`` (RIGHT).

    Branch: ``|2 pi xi|^sigma exp(+- sigma pi i sign(xi)/2)`` with + for LEFT.
    Zero bin: 1 for sigma = 0, else 0 (flagged singular when sigma < 0).
    """
    sigma = float(sigma)
    if not math.isfinite(sigma):
        raise FracdecompError("power order must be finite")
    n = grid.n
    vals = np.empty(n, dtype=np.complex128)
    if sigma == 0.0:
        vals[:] = 1.0
        return MultiplierSymbol(grid, vals, 0.0, f"power(0,{side.value})")
    sgn = 1.0 if side is Side.LEFT else -1.0
    # one phase evaluation, mirrored by conjugation: reflection is fp-exact
    phase = math.cos(sigma * math.pi / 2) + 1j * sgn * math.sin(sigma * math.pi / 2)
    kpos = np.arange(1, n // 2 + 1)
    mag = np.abs(2.0 * np.pi * kpos * grid.dxi) ** sigma
    vpos = mag * phase
    z = grid.zero_bin_pos
    vals[z] = 0.0
    vals[z + 1 :] = vpos
    vals[:z] = np.conj(vpos[:z][::-1])
    return MultiplierSymbol(
        grid,
        vals,
        sigma,
        f"power({sigma},{side.value})",
        singular_zero_bin=sigma < 0,
    )


def _hermitian_scrub(grid: UniformGrid, coeffs: np.ndarray) -> np.ndarray:
    """Average each paired bin against the conjugate of its mirror."""
    out = coeffs.copy()
    z = grid.zero_bin_pos
    body = out[: 2 * z + 1]
    out[: 2 * z + 1] = 0.5 * (body + np.conj(body[::-1]))
    return out


def apply_multiplier(spectrum: Spectrum, symbol: MultiplierSymbol) -> Spectrum:
    """Bin-wise product ``symbol * spectrum``.

    When the symbol is conjugate-reflective and the input is (numerically)
    Hermitian, the product is scrubbed back to exact Hermitian symmetry to
    remove rounding drift.  For even n the Nyquist bin is zeroed: the phase
    of a fractional-power symbol is ambiguous between +-Nyquist.
    """
    spectrum.grid.require_compatible(symbol.grid)
    out = symbol.values * spectrum.coeffs
    if symbol.conjugate_reflective and spectrum.hermitian_defect() <= _SCRUB_TOL:
        out = _hermitian_scrub(spectrum.grid, out)
    nyq = spectrum.grid.nyquist_pos
    if nyq is not None:
        out[nyq] = 0.0
    return Spectrum(spectrum.grid, out)
