"""
fermipoly: exact volumes, extreme points and volume bounds for the eigenvalue
polytopes of fermionic one-body reduced density matrices.

B_{d,N}  ordered eigenvalues >= 0 summing to N (bosonic simplex)
P_{d,N}  B with lambda_1 <= 1 (Pauli principle)
A        P with lambda_m <= t, certified to lie inside the true polytope F
"""
from .bounds import (
    RatioBoundResult,
    Regime,
    best_exact_lower_bound,
    exact_ratio_A_over_P,
    exact_ratios_over_m,
    excess_ratio_upper,
    gpc_vs_pauli_ratio_bound,
    guard_fixed_n,
    pauli_loss_bounds,
    proof_m_choices,
    ratio_lower_fixed_n,
    ratio_lower_fixed_ratio,
)
from .errors import DomainError, InvariantViolation, PreconditionError
from .exact import (
    DEFAULT_PRECISION_BITS,
    BoundInterval,
    Rational,
    as_rational,
    binom,
    format_decimal,
    interval_pow,
    interval_sqrt_rational,
    rat_ceil,
    rat_floor,
)
from .irwin_hall import (
    PiecewisePoly,
    check_monotone_ratio,
    ih_cdf,
    ih_pdf,
    ih_pdf_oracle,
    uniform_sum_density,
    vol_P_lower_bound,
)
from .mc_oracle import McEstimate, agrees, estimate_order_fraction, estimate_pauli_fraction, sample_simplex_point
from .membership import (
    DimKind,
    DimResult,
    ExtremePoint,
    InterpolationPoint,
    MembershipVerdict,
    PointKind,
    Reason,
    a_subset_F_certificate,
    admissible_caps,
    extreme_points_B,
    extreme_points_in_A,
    extreme_points_P,
    interpolation_points,
    lme_exists,
    lme_moduli_dim,
    point_in_F,
    rep_index,
    segment_parameter,
    threshold_t,
)
from .volumes import (
    PolytopeSpec,
    ScaledVolume,
    constrained_block_prob,
    order_sum_cdf,
    order_sum_cdf_decomposed,
    orthant_slab_vol,
    pauli_unordered_density,
    vol_A,
    vol_B,
    vol_P,
    volume,
)

__version__ = "0.1.0"
