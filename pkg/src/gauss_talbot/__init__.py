"""Quadratic Gauss sums and the fractional Talbot effect in two pictures."""

from .gauss_sums import (
    GaussSumParams,
    PhaseRational,
    classical_char_sum,
    classical_char_sum_closed,
    g_truncated,
    k_closed,
    k_direct,
    phase_eval,
    verify_reciprocity,
)
from .numtheory import (
    FractionalDistance,
    ModInverse,
    bezout_pair,
    gcd,
    half_inverse,
    jacobi_symbol,
    legendre_symbol,
    mod_inverse,
    special_symbols,
)
from .report import VerificationReport
from .talbot import (
    CoefficientRecord,
    ImagePositions,
    coeff_particle_closed,
    coeff_particle_direct,
    coeff_wave_closed,
    coeff_wave_direct,
    complementarity_ratio,
    complementarity_residual,
    image_positions,
    verify_phase_identities,
)

__version__ = "0.1.0"
