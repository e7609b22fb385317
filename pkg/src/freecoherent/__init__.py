"""Free coherent states in the free Fock space and their 2-adic parametrization."""

from .coherent import (
    CoherentTruncation,
    GammaParams,
    IndexSequence,
    coherent_truncate,
    digit_at,
    eigen_residual,
    level_norm,
)
from .fock import FockVector, add, annihilate, create, inner_product, norm_squared, scale, vacuum
from .metrics import (
    IDENTICAL,
    MetricBoundConstants,
    check_ball_correspondence,
    check_equivalence_bounds,
    common_prefix,
    rho,
    tau_squared_closed,
    tau_squared_numeric,
)
from .padic import (
    INFINITE,
    PadicBall,
    PadicInt,
    ball_contains,
    from_sequence,
    padd,
    padic_distance_exponent,
    psub,
    valuation,
)

__version__ = "0.1.0"
