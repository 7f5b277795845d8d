"""
Quantitative bounds on how much volume the generalized Pauli constraints remove.

Two kinds of results live here:

* closed-form lower bounds on Vol(F)/Vol(P) for fixed N and for a fixed filling
  ratio r = N/d, plus the bracket on Vol(P)/Vol(B);
* the exact ratio Vol(A)/Vol(P) for the capped polytope A, which is a valid
  lower bound on Vol(F)/Vol(P) and the sharpest one available.

Bounds with only rational powers are exact ``Fraction``s. The fixed-ratio bound
contains irrational powers and is returned as a :class:`BoundInterval`. A lower
bound that is <= 0 is returned with ``vacuous=True`` rather than clamped.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import DomainError, PreconditionError
from .exact import (
    DEFAULT_PRECISION_BITS,
    BoundInterval,
    interval_pow,
    interval_sqrt_rational,
)
from .membership import a_subset_F_certificate, threshold_t
from .volumes import _vol_A_unordered_sum, vol_B, vol_P

Value = Union[Fraction, BoundInterval]


class Regime(enum.Enum):
    FIXED_N = "FixedN"
    FIXED_RATIO = "FixedRatio"
    EXACT = "Exact"


@dataclass(frozen=True)
class RatioBoundResult:
    """A lower bound ``value = 1 - deficit`` on a volume ratio.

    ``deficit`` is carried separately because for large d the bound is within
    10^-5000 of 1, far below any sensible interval precision around 1.
    """

    value: Value
    regime: Regime
    vacuous: bool
    deficit: Value

    def __post_init__(self) -> None:
        if self.regime is Regime.EXACT:
            if not isinstance(self.value, Fraction) or not 0 <= self.value <= 1:
                raise PreconditionError("an exact ratio must be a rational in [0, 1]")


def _is_vacuous(value: Value) -> bool:
    if isinstance(value, Fraction):
        return value <= 0
    # only a certified positive lower end makes the bound informative
    return not value.certainly_positive()


def pauli_loss_bounds(d: int, N: int) -> Tuple[Fraction, Fraction]:
    """Bracket (lower, upper) on Vol(P_{d,N}) / Vol(B_{d,N}).

    At fixed r = N/d the upper end tends to 1 - e^(-1/r) as d grows; only the
    finite-d bracket is computed here.
    """
    if not 1 <= N <= d:
        raise PreconditionError(f"need 1 <= N <= d, got d={d}, N={N}")
    if N == 1:
        # P = B; the formula would read 0^0 at d = 1
        return Fraction(1), Fraction(1)
    q = Fraction(N - 1, N) ** (d - 1)
    return 1 - d * q, 1 - q


def guard_fixed_n(d: int, N: int) -> bool:
    """d ((N-1)/N)^(d-1) <= 1, the largeness condition on d."""
    if N < 1 or d < 1:
        return False
    return d * Fraction(N - 1, N) ** (d - 1) <= 1


def _fixed_n_prefactor(d: int, N: int) -> Fraction:
    return Fraction(d ** N) / (1 - d * Fraction(N - 1, N) ** (d - 1))


def ratio_lower_fixed_n(d: int, N: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> RatioBoundResult:
    """Lower bound on Vol(F)/Vol(P) for 8 <= N <= d/2 once d is large enough."""
    if not (8 <= N and 2 * N <= d):
        raise PreconditionError(f"fixed-N bound needs 8 <= N <= d/2, got d={d}, N={N}")
    if not guard_fixed_n(d, N):
        raise PreconditionError(f"d={d} too small for N={N}: d((N-1)/N)^(d-1) > 1")
    prefactor = _fixed_n_prefactor(d, N)
    # min[(N+7)/2, sqrt(32N)] decided exactly by squaring
    if (N + 7) ** 2 <= 128 * N:
        deficit: Value = prefactor * Fraction(N + 7, 2 * N) ** (d - 1)
    else:
        root = math.isqrt(32 * N)
        if root * root == 32 * N:
            deficit = prefactor * Fraction(root, N) ** (d - 1)
        else:
            base = interval_sqrt_rational(32 * N, precision_bits) / N
            deficit = BoundInterval.exact(prefactor, precision_bits) * base.pow_int(d - 1)
    value = 1 - deficit
    return RatioBoundResult(value, Regime.FIXED_N, _is_vacuous(value), deficit)


def ratio_lower_fixed_ratio(d: int, N: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> RatioBoundResult:
    """Lower bound on Vol(F)/Vol(P) at filling r = N/d in (0, 1/2) with N >= 20."""
    r = Fraction(N, d) if d > 0 else Fraction(0)
    if N < 20 or not 0 < r < Fraction(1, 2):
        raise PreconditionError(f"fixed-ratio bound needs N >= 20 and 0 < N/d < 1/2, got d={d}, N={N}")

    def ipow(base: Fraction, exponent: Fraction) -> BoundInterval:
        return interval_pow(BoundInterval.exact(base, precision_bits), BoundInterval.exact(exponent, precision_bits))

    r_term = ipow(r, r + Fraction(1, 2))
    prefactor = 1 / (r_term * ipow(1 - r, Fraction(3, 2) - r))
    inner = 8 / (r_term * ipow(1 - r, 1 - r) * interval_sqrt_rational(d, precision_bits))
    deficit = prefactor * inner.pow_int(d - 1)
    value = 1 - deficit
    return RatioBoundResult(value, Regime.FIXED_RATIO, _is_vacuous(value), deficit)


def proof_m_choices(N: int) -> Tuple[int, int]:
    """The two cap indices used for the fixed-N estimate: N-7 and N+9-ceil(sqrt(8(N+9)))."""
    if N < 8:
        raise PreconditionError("need N >= 8")
    s = math.isqrt(8 * (N + 9))
    ceil_sqrt = s if s * s == 8 * (N + 9) else s + 1
    return N - 7, N + 9 - ceil_sqrt


def _exact_ratio(d: int, N: int, m: int, p_sum: Fraction) -> Fraction:
    t = threshold_t(N, m)
    return _vol_A_unordered_sum(d, Fraction(N), m, t) / p_sum


def _pauli_sum(d: int, N: int) -> Fraction:
    # the common factorials of vol_A and vol_P cancel in the ratio
    return vol_P(d, N).coeff * math.factorial(d) * math.factorial(d - 1)


def exact_ratio_A_over_P(d: int, N: int, m: int) -> RatioBoundResult:
    """Vol(A_{d,N,m,t}) / Vol(P_{d,N}) at the certified threshold t; a lower bound on Vol(F)/Vol(P)."""
    if not a_subset_F_certificate(d, N, m):
        raise PreconditionError(f"no containment certificate for d={d}, N={N}, m={m}")
    value = _exact_ratio(d, N, m, _pauli_sum(d, N))
    return RatioBoundResult(value, Regime.EXACT, value <= 0, 1 - value)


def exact_ratios_over_m(d: int, N: int) -> List[Fraction]:
    """Exact Vol(A)/Vol(P) for m = 1, ..., N-7 (index 0 is m = 1)."""
    if not (8 <= N and 2 * N <= d):
        raise PreconditionError(f"need 8 <= N <= d/2, got d={d}, N={N}")
    p_sum = _pauli_sum(d, N)
    return [_exact_ratio(d, N, m, p_sum) for m in range(1, N - 6)]


def best_exact_lower_bound(d: int, N: int) -> Tuple[int, Fraction]:
    """(m_star, ratio) maximizing the exact A/P ratio over m; ties go to the smaller m."""
    ratios = exact_ratios_over_m(d, N)
    best = max(range(len(ratios)), key=lambda k: (ratios[k], -k))
    return best + 1, ratios[best]


def excess_ratio_upper(f_over_p_lower: Fraction, b_over_p: Fraction,
                       precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundInterval:
    """[0, U] with U = (1 - f_over_p_lower) / (b_over_p - 1) rounded up."""
    if not 0 <= f_over_p_lower <= 1:
        raise PreconditionError("a volume ratio lower bound must lie in [0, 1]")
    if b_over_p <= 1:
        raise DomainError("Vol(B)/Vol(P) must exceed 1")
    upper = (1 - f_over_p_lower) / (b_over_p - 1)
    zero = BoundInterval.exact(0, precision_bits)
    return BoundInterval(zero.lo, BoundInterval.exact(upper, precision_bits).hi, precision_bits)


def gpc_vs_pauli_ratio_bound(d: int, N: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundInterval:
    """Interval containing Vol(P minus F) / Vol(B minus P).

    Uses the best exact A/P ratio as the lower bound on Vol(F)/Vol(P). The
    largeness guard of the fixed-N theorem is not required: every ingredient
    here is exact.
    """
    _, ratio = best_exact_lower_bound(d, N)
    return excess_ratio_upper(ratio, vol_B(d, N).ratio(vol_P(d, N)), precision_bits)


__all__ = [
    "Regime",
    "RatioBoundResult",
    "pauli_loss_bounds",
    "guard_fixed_n",
    "ratio_lower_fixed_n",
    "ratio_lower_fixed_ratio",
    "proof_m_choices",
    "exact_ratio_A_over_P",
    "exact_ratios_over_m",
    "best_exact_lower_bound",
    "excess_ratio_upper",
    "gpc_vs_pauli_ratio_bound",
]
