"""Ray and polarization optics as two-by-two representations of the Lorentz group."""
from .chain import ChainSpec, Element, parse_chain
from .config import DEFAULT_TOL, Tolerances
from .errors import ChainSyntaxError, DomainError, NumericalIntegrityError, OpticsError, UsageError
from .lens_system import (
    ContractionRow,
    OneLensSystem,
    WignerDecomposition,
    contraction_sweep,
    core_matrix,
    decompose_core,
    is_focused,
    lens,
    one_lens_chain,
    reconstruct,
    renormalize_core,
    translation,
)
from .lorentz import apply, lift, minkowski_interval
from .polarization import (
    MixednessReport,
    coherency_from_jones,
    coherency_from_stokes,
    decohere,
    mixedness,
    mueller_from_sl2c,
    stokes_from_coherency,
    stokes_from_jones,
    transform_jones,
)
from .sl2c import ConjugacyClass, attenuation, classify_real, compose, phase_shift, rotation, x_boost

__version__ = "0.1.0"
