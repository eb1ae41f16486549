"""Domain exceptions. ``code`` is the machine-readable tag used by the
service (HTTP 422 payload) and the CLI (``ERROR <code>: <message>``)."""


class FracdecompError(Exception):
    code = "error"


class GridMismatchError(FracdecompError):
    """Binary operation on signals/spectra living on different grids."""

    code = "grid_mismatch"


class AlignmentError(FracdecompError):
    """Grid geometry does not support the requested operation."""

    code = "alignment"


class DilationIncompatibleError(AlignmentError):
    """Dilation factor does not divide the sample count."""

    code = "dilation_incompatible"


class OrderRangeError(FracdecompError):
    """Fractional order outside the range an operator realization supports."""

    code = "order_out_of_range"


class DegenerateOrderError(OrderRangeError):
    """Order 0 requested where the scheme is undefined."""

    code = "degenerate_order"


class NotRealSignalError(FracdecompError):
    """Spectrum too far from Hermitian symmetry to describe a real signal."""

    code = "not_real_signal"


class FitWindowError(FracdecompError):
    """Decay-fit frequency window empty or too sparse."""

    code = "fit_window"


class SignalFormatError(FracdecompError):
    """Malformed signal file (bad header, non-uniform or non-increasing x)."""

    code = "signal_format"
