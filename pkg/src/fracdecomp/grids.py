"""Uniform grids, sampled signals and their geometric operators.

The real line is truncated to a window ``[x_min, x_min + n*dx)`` sampled at
``x_j = x_min + j*dx``.  All quadrature is the rectangle rule ``dx * sum``,
which on the periodic model coincides with the trapezoid rule for decaying
signals and matches the discrete Fourier scaling used in :mod:`.fourier`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AlignmentError,
    DilationIncompatibleError,
    FracdecompError,
    GridMismatchError,
)

__all__ = [
    "UniformGrid",
    "SampledSignal",
    "Side",
    "inner_product",
    "l2_norm",
    "translate",
    "dilate",
    "reflect",
    "remove_mean",
]

_ALIGN_TOL = 1e-12


class Side(enum.Enum):
    """Side of a fractional operator: LEFT integrates from -inf, RIGHT to +inf."""

    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class UniformGrid:
    """Uniform sampling lattice: ``x_j = x_min + j*dx`` for ``0 <= j < n``.

    Two grids are compatible iff ``(x_min, dx, n)`` agree exactly; every
    binary operation checks this and never silently coerces.
    """

    x_min: float
    dx: float
    n: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x_min) and math.isfinite(self.dx)):
            raise AlignmentError("grid endpoints must be finite")
        if self.dx <= 0:
            raise AlignmentError(f"dx must be positive, got {self.dx}")
        if self.n < 2:
            raise AlignmentError(f"need at least 2 samples, got {self.n}")
        if not math.isfinite(self.x_min + (self.n - 1) * self.dx):
            raise AlignmentError("grid extends beyond finite range")

    @classmethod
    def from_window(cls, x_min: float, x_max: float, n: int) -> "UniformGrid":
        """Periodic-cell grid covering ``[x_min, x_max)`` with ``dx=(x_max-x_min)/n``."""
        if x_max <= x_min:
            raise AlignmentError("x_max must exceed x_min")
        return cls(x_min, (x_max - x_min) / n, n)

    @classmethod
    def symmetric(cls, half_width: float, n: int) -> "UniformGrid":
        """Point-symmetric grid ``x_0 = -half_width .. x_{n-1} = +half_width``.

        Odd ``n`` also places x = 0 on a sample point.
        """
        if half_width <= 0:
            raise AlignmentError("half_width must be positive")
        dx = 2.0 * half_width / (n - 1)
        return cls(-half_width, dx, n)

    def refined(self, factor: int = 2) -> "UniformGrid":
        """Same window, ``factor`` times more samples (dx / factor)."""
        return UniformGrid(self.x_min, self.dx / factor, self.n * factor)

    @property
    def x(self) -> np.ndarray:
        return self.x_min + np.arange(self.n) * self.dx

    @property
    def x_last(self) -> float:
        return self.x_min + (self.n - 1) * self.dx

    @property
    def span(self) -> float:
        """Length of the periodic cell, ``n*dx``."""
        return self.n * self.dx

    # -- spectral layout (centered bins, see fourier.py) --------------------

    @property
    def bins(self) -> np.ndarray:
        """Centered frequency bins k in ``-ceil(n/2)+1 .. floor(n/2)``."""
        return np.arange(-((self.n - 1) // 2), self.n // 2 + 1)

    @property
    def dxi(self) -> float:
        """Frequency spacing ``1/(n*dx)``."""
        return 1.0 / (self.n * self.dx)

    @property
    def xi(self) -> np.ndarray:
        """Physical frequencies ``k/(n*dx)`` per centered bin."""
        return self.bins * self.dxi

    @property
    def nyquist(self) -> float:
        return 1.0 / (2.0 * self.dx)

    @property
    def zero_bin_pos(self) -> int:
        """Index of the k = 0 bin in centered ordering."""
        return (self.n - 1) // 2

    @property
    def nyquist_pos(self) -> int | None:
        """Index of the k = n/2 bin (even n only)."""
        return self.n - 1 if self.n % 2 == 0 else None

    # -- geometry ------------------------------------------------------------

    def is_symmetric(self) -> bool:
        """Sample points symmetric about 0: ``x_0 = -x_{n-1}``."""
        scale = max(1.0, abs(self.x_min))
        return abs(self.x_min + self.x_last) <= _ALIGN_TOL * scale

    def index_of_zero(self) -> int | None:
        """Index j with ``x_j = 0`` up to alignment tolerance, else None."""
        j = round(-self.x_min / self.dx)
        if 0 <= j < self.n:
            scale = max(1.0, abs(self.x_min))
            if abs(self.x_min + j * self.dx) <= _ALIGN_TOL * scale:
                return j
        return None

    def compatible(self, other: "UniformGrid") -> bool:
        return (self.x_min, self.dx, self.n) == (other.x_min, other.dx, other.n)

    def require_compatible(self, other: "UniformGrid") -> None:
        if not self.compatible(other):
            raise GridMismatchError(
                f"incompatible grids: ({self.x_min}, {self.dx}, {self.n}) vs "
                f"({other.x_min}, {other.dx}, {other.n})"
            )


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Real-valued samples on a :class:`UniformGrid`. Immutable, always finite."""

    grid: UniformGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        if v.shape != (self.grid.n,):
            raise FracdecompError(
                f"expected {self.grid.n} samples, got array of shape {v.shape}"
            )
        if not np.all(np.isfinite(v)):
            raise FracdecompError("signal values must be finite (no NaN/inf)")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    # Signals form a vector space over compatible grids.
    def __add__(self, other: "SampledSignal") -> "SampledSignal":
        self.grid.require_compatible(other.grid)
        return SampledSignal(self.grid, self.values + other.values)

    def __sub__(self, other: "SampledSignal") -> "SampledSignal":
        self.grid.require_compatible(other.grid)
        return SampledSignal(self.grid, self.values - other.values)

    def __mul__(self, scalar: float) -> "SampledSignal":
        return SampledSignal(self.grid, self.values * float(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "SampledSignal":
        return SampledSignal(self.grid, -self.values)

    def mean_level(self) -> float:
        """Windowed integral ``dx * sum(values)`` (the discrete DC mass)."""
        return self.grid.dx * float(np.sum(self.values))


def inner_product(a: SampledSignal, b: SampledSignal) -> float:
    """Rectangle-rule L2 pairing ``dx * sum(a_j b_j)``; symmetric, bilinear."""
    a.grid.require_compatible(b.grid)
    return a.grid.dx * float(np.dot(a.values, b.values))


def l2_norm(a: SampledSignal) -> float:
    return math.sqrt(inner_product(a, a))


def translate(a: SampledSignal, k: int) -> SampledSignal:
    """Circular shift by ``k`` bins: ``out_j = a_{(j-k) mod n}``.

    Represents the continuous translation by ``h = k*dx`` exactly on the
    periodic model; preserves the L2 norm exactly.
    """
    return SampledSignal(a.grid, np.roll(a.values, int(k)))


def dilate(a: SampledSignal, kappa: int) -> SampledSignal:
    """Index decimation realizing ``u(x) -> u(kappa*x)``.

    Requires ``kappa | n`` and x = 0 on the grid so the fixed point of the
    dilation is a sample.  Output grid: ``(x_min/kappa, dx, n/kappa)``.
    """
    kappa = int(kappa)
    if kappa < 1:
        raise DilationIncompatibleError(f"kappa must be >= 1, got {kappa}")
    g = a.grid
    if g.n % kappa != 0:
        raise DilationIncompatibleError(f"kappa={kappa} does not divide n={g.n}")
    if g.index_of_zero() is None:
        raise AlignmentError("dilation requires x = 0 to be a sample point")
    out_grid = UniformGrid(g.x_min / kappa, g.dx, g.n // kappa)
    return SampledSignal(out_grid, a.values[::kappa].copy())


def reflect(a: SampledSignal) -> SampledSignal:
    """Reversal ``out_j = a_{n-1-j}``, i.e. ``u(x) -> u(-x)`` on symmetric grids."""
    if not a.grid.is_symmetric():
        raise AlignmentError(
            "reflect requires a grid symmetric about 0 (x_min = -x_last)"
        )
    return SampledSignal(a.grid, a.values[::-1].copy())


def remove_mean(a: SampledSignal) -> SampledSignal:
    """Subtract the arithmetic mean, zeroing the DC spectral bin exactly."""
    return SampledSignal(a.grid, a.values - a.values.mean())
