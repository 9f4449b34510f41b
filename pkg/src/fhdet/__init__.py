"""Exact and asymptotic structured determinants for symbols with
Fisher-Hartwig singularities: Toeplitz, Hankel, and Toeplitz+Hankel.
"""

from .errors import (
    ConfigError,
    ConvergenceError,
    DegenerateRepresentationError,
    FHDetError,
    HypothesisError,
    PoleError,
    SingularSystemError,
)
from .specfun import LogComplex, log_barnes_g, log_gamma, recip_gamma
from .symbol import (
    CoeffTable,
    FHSymbol,
    FourierSeries,
    HankelWeight,
    Representation,
    Singularity,
    WeightSingularity,
    apply_representation,
    beta_seminorm,
    coeff_table,
    eval_symbol,
    even_symbol_to_weight,
    find_minimal_representations,
    fourier_coefficients,
    is_degenerate,
    is_even_symbol,
    load_config,
    symbol_from_dict,
    symbol_to_dict,
    szego_pair_sum,
    weight_from_dict,
    weight_to_dict,
    weight_to_even_symbol,
    wiener_hopf_logs,
)

__version__ = "0.1.0"
