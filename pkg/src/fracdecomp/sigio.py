"""Signal and spectrum file formats.

Signal CSV: header ``x,value``, one sample per row, strictly increasing
equispaced x (verified within 1e-9 relative to the spacing).  Spectrum CSV:
header ``xi,re,im`` in increasing frequency.  All numeric output carries 17
significant digits so values round-trip exactly.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .decomposition import DecompositionResult
from .errors import SignalFormatError
from .fourier import Spectrum
from .grids import SampledSignal, UniformGrid

__all__ = [
    "read_signal_csv",
    "write_signal_csv",
    "write_spectrum_csv",
    "write_decomposition_json",
    "fmt",
]

_SPACING_RTOL = 1e-9


def fmt(v: float) -> str:
    """Render a float at full (17 significant digit) precision."""
    return format(float(v), ".17g")


def read_signal_csv(path: str | Path) -> SampledSignal:
    path = Path(path)
    try:
        with path.open(newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip().lower() for h in header[:2]] != ["x", "value"]:
                raise SignalFormatError(
                    f"{path}: expected header 'x,value', got {header!r}"
                )
            rows = [row for row in reader if row]
    except OSError as exc:
        raise SignalFormatError(f"cannot read {path}: {exc}") from exc
    if len(rows) < 2:
        raise SignalFormatError(f"{path}: need at least 2 samples, got {len(rows)}")
    try:
        x = np.array([float(r[0]) for r in rows])
        values = np.array([float(r[1]) for r in rows])
    except (ValueError, IndexError) as exc:
        raise SignalFormatError(f"{path}: malformed row: {exc}") from exc

    diffs = np.diff(x)
    if np.any(diffs <= 0):
        raise SignalFormatError(f"{path}: x must be strictly increasing")
    dx = (x[-1] - x[0]) / (len(x) - 1)
    if np.max(np.abs(diffs - dx)) > _SPACING_RTOL * abs(dx):
        raise SignalFormatError(
            f"{path}: x is not uniformly spaced within {_SPACING_RTOL:g} relative"
        )
    grid = UniformGrid(float(x[0]), float(dx), len(x))
    return SampledSignal(grid, values)


def write_signal_csv(path: str | Path, signal: SampledSignal) -> None:
    path = Path(path)
    x = signal.grid.x
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x", "value"])
        for xi, v in zip(x, signal.values):
            writer.writerow([fmt(xi), fmt(v)])


def write_spectrum_csv(path: str | Path, spectrum: Spectrum) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["xi", "re", "im"])
        for xi, c in zip(spectrum.xi, spectrum.coeffs):
            writer.writerow([fmt(xi), fmt(c.real), fmt(c.imag)])


def write_decomposition_json(
    path: str | Path, result: DecompositionResult, u_csv: str | Path
) -> None:
    payload = {
        "s": result.variant.s,
        "kind": result.variant.kind.value,
        "p": result.variant.p,
        "q": result.variant.q,
        "residual_l2": result.residual_l2,
        "dc_defect": result.dc_defect,
        "symbol_min_modulus": result.symbol_min_modulus,
        "u_csv": str(u_csv),
    }
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
