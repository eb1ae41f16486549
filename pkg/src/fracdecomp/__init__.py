"""fracdecomp: fractional Riemann-Liouville operators on sampled real-line
signals, the integral-plus-derivative decomposition solver, and the
verification suites for the exact identities they satisfy."""

from .grids import (
    SampledSignal,
    Side,
    UniformGrid,
    dilate,
    inner_product,
    l2_norm,
    reflect,
    remove_mean,
    translate,
)
from .fourier import (
    MultiplierSymbol,
    Spectrum,
    apply_multiplier,
    dft_forward,
    dft_inverse,
    power_symbol,
)
from .operators import (
    GLWeights,
    adjoint_defect,
    apply_grunwald,
    apply_spectral,
    gl_weights,
)
from .decomposition import (
    DecompositionResult,
    EnergyIdentity,
    Kind,
    VariantSpec,
    cross_inner,
    decompose,
    decomposition_symbol,
    energy_identity_defect,
    reconstruct,
)
from .sobolev import (
    RegularityFit,
    decay_exponent,
    sobolev_norm,
    sobolev_seminorm,
)
from . import corpus, errors, sigio, verify

__version__ = "0.1.0"

__all__ = [
    "SampledSignal",
    "Side",
    "UniformGrid",
    "dilate",
    "inner_product",
    "l2_norm",
    "reflect",
    "remove_mean",
    "translate",
    "MultiplierSymbol",
    "Spectrum",
    "apply_multiplier",
    "dft_forward",
    "dft_inverse",
    "power_symbol",
    "GLWeights",
    "adjoint_defect",
    "apply_grunwald",
    "apply_spectral",
    "gl_weights",
    "DecompositionResult",
    "EnergyIdentity",
    "Kind",
    "VariantSpec",
    "cross_inner",
    "decompose",
    "decomposition_symbol",
    "energy_identity_defect",
    "reconstruct",
    "RegularityFit",
    "decay_exponent",
    "sobolev_norm",
    "sobolev_seminorm",
    "corpus",
    "errors",
    "sigio",
    "verify",
]
