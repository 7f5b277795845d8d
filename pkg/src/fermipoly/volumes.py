"""
Exact (d-1)-volumes of the eigenvalue polytopes.

All volumes live on the hyperplane sum(lambda) = N and carry a factor sqrt(d)
from the Jacobian of the parametrisation (lambda_1, ..., lambda_{d-1}). We keep
that factor symbolic: a :class:`ScaledVolume` stores the rational ``coeff`` with
Vol = coeff * sqrt(d), so ratios at equal d are exact rationals.

Polytopes (all ordered, lambda_1 >= ... >= lambda_d >= 0, sum = N):

* ``B``: no upper cap (a simplex);
* ``P``: lambda_1 <= 1;
* ``A``: lambda_1 <= 1 and lambda_m <= t.

The A-volume comes from differentiating the joint CDF of the m-th largest of
d uniforms and their sum (:func:`order_sum_cdf`). The sums are assembled over
a common integer denominator, so the inner loop is plain ``int`` arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DomainError, PreconditionError
from .exact import RationalLike, as_rational, binom, rat_floor
from .irwin_hall import ih_pdf


@dataclass(frozen=True)
class ScaledVolume:
    """A (d-1)-dimensional volume equal to ``coeff * sqrt(d)``."""

    d: int
    coeff: Fraction

    def __post_init__(self) -> None:
        if self.coeff < 0:
            raise PreconditionError("volumes are non-negative")

    def ratio(self, other: "ScaledVolume") -> Fraction:
        """Exact ratio self / other; sqrt(d) cancels."""
        if self.d != other.d:
            raise PreconditionError(f"cannot take an exact ratio across dimensions {self.d} and {other.d}")
        if other.coeff == 0:
            raise DomainError("ratio with a zero volume")
        return self.coeff / other.coeff

    __truediv__ = ratio

    def __float__(self) -> float:
        return float(self.coeff) * math.sqrt(self.d)


@dataclass(frozen=True)
class PolytopeSpec:
    """Parameters (d, N) and an optional cap (m, t) meaning lambda_m <= t."""

    d: int
    N: Fraction
    cap: Optional[Tuple[int, Fraction]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "N", as_rational(self.N))
        if self.d < 1:
            raise PreconditionError("d must be positive")
        if not 0 <= self.N <= self.d:
            raise PreconditionError(f"need 0 <= N <= d, got N={self.N}, d={self.d}")
        if self.cap is not None:
            m, t = self.cap
            t = as_rational(t)
            object.__setattr__(self, "cap", (m, t))
            if not 1 <= m <= self.d or not 0 < t <= 1:
                raise PreconditionError(f"cap needs 1 <= m <= d and 0 < t <= 1, got m={m}, t={t}")


def vol_B(d: int, N: RationalLike) -> ScaledVolume:
    """Bosonic simplex: coeff = N^(d-1) / (d! (d-1)!)."""
    N = as_rational(N)
    if d < 1 or N < 0:
        raise PreconditionError(f"vol_B needs d >= 1 and N >= 0, got d={d}, N={N}")
    return ScaledVolume(d, N ** (d - 1) / (math.factorial(d) * math.factorial(d - 1)))


def vol_P(d: int, N: RationalLike) -> ScaledVolume:
    """Ordered Pauli polytope (hypersimplex slice divided by d!).

    Integer N uses the finite alternating sum up to N - 1; other rational N go
    through the Irwin-Hall density, which is the same function of N.
    """
    N = as_rational(N)
    if d < 1 or not 0 <= N <= d:
        raise PreconditionError(f"vol_P needs 0 <= N <= d, got d={d}, N={N}")
    if N.denominator == 1:
        n = N.numerator
        if n == 0:
            return ScaledVolume(d, Fraction(1) if d == 1 else Fraction(0))
        s = sum((-1) ** k * binom(d, k) * (n - k) ** (d - 1) for k in range(n))
        return ScaledVolume(d, Fraction(s, math.factorial(d) * math.factorial(d - 1)))
    if d == 1:
        return ScaledVolume(1, Fraction(0))
    return ScaledVolume(d, ih_pdf(d, N) / math.factorial(d))


def orthant_slab_vol(d: int, N: RationalLike, m: int, t: RationalLike) -> ScaledVolume:
    """Unordered volume of {lambda_1..lambda_m > t, sum = N}: coeff = (N - m t)^(d-1) / (d-1)!."""
    N, t = as_rational(N), as_rational(t)
    if d < 1 or m < 0:
        raise PreconditionError("need d >= 1 and m >= 0")
    if N < m * t:
        raise DomainError(f"orthant slab needs N >= m t, got N={N}, m t={m * t}")
    return ScaledVolume(d, (N - m * t) ** (d - 1) / math.factorial(d - 1))


# ---------------------------------------------------------------------------
# Order statistics of uniforms
# ---------------------------------------------------------------------------

def _check_order_args(d: int, m: int, t: Fraction) -> None:
    if d < 1 or not 1 <= m <= d:
        raise PreconditionError(f"need 1 <= m <= d, got m={m}, d={d}")
    if not 0 < t <= 1:
        raise PreconditionError(f"need 0 < t <= 1, got t={t}")


def constrained_block_prob(d: int, j: int, t: RationalLike, x: RationalLike) -> Fraction:
    """P[X_1..X_j > t, X_{j+1}..X_d <= t, X_1 + ... + X_d <= x] for i.i.d. U(0,1)."""
    t, x = as_rational(t), as_rational(x)
    if d < 1 or not 0 <= j <= d:
        raise PreconditionError(f"need 0 <= j <= d, got j={j}, d={d}")
    if not 0 < t <= 1:
        raise PreconditionError(f"need 0 < t <= 1, got t={t}")
    if j >= rat_floor(x / t) + 1:
        return Fraction(0)
    total = Fraction(0)
    for i in range(j + 1):
        k_max = rat_floor((x - i) / t) - (j - i)
        inner = Fraction(0)
        for k in range(min(k_max, d - j) + 1):
            base = x - (k + j - i) * t - i
            inner += (-1) ** k * binom(d - j, k) * base ** d
        total += (-1) ** i * binom(j, i) * inner
    return total / math.factorial(d)


def _alt_partial_sum(k: int, J: int) -> int:
    """sum_{j=0}^{J} (-1)^j C(k, j), which telescopes to (-1)^J C(k-1, J) for k >= 1."""
    if J < 0:
        return 0
    if k == 0:
        return 1
    return (-1) ** J * math.comb(k - 1, J)


def _order_sum_kernel(d: int, m: int, t: Fraction, x: Fraction, power: int) -> Tuple[int, int]:
    """Integer numerator S and denominator D with sum_terms = S / D**power.

    The terms are those of the joint CDF of (m-th largest, sum) with every
    (x - k t - i)^d replaced by (x - k t - i)^power. Only strictly positive
    bases are kept; zero bases either vanish (power >= 1) or sit on the
    excluded side of a closed boundary (power == 0).
    """
    a, b = x.numerator, x.denominator
    p, q = t.numerator, t.denominator
    D = b * q
    comb = math.comb
    total = 0
    i_max = min(m - 1, rat_floor(x))
    for i in range(i_max + 1):
        base_i = (a - i * b) * q  # (x - i) * D
        if base_i > 0:
            total += (-1) ** i * comb(d, i) * base_i ** power
        k_hi = min(base_i // (p * b), d - i)  # C(d, k+i) vanishes beyond d
        J = m - i - 1
        for k in range(m - i, k_hi + 1):
            base = base_i - k * p * b
            if base <= 0:
                break
            coeff = comb(d, k + i) * comb(k + i, i) * _alt_partial_sum(k, J)
            if (k + i) & 1:
                coeff = -coeff
            total += coeff * base ** power
    return total, D


def order_sum_cdf(d: int, m: int, t: RationalLike, x: RationalLike) -> Fraction:
    """P[m-th largest of X_1..X_d <= t and X_1 + ... + X_d <= x] for i.i.d. U(0,1)."""
    t, x = as_rational(t), as_rational(x)
    _check_order_args(d, m, t)
    S, D = _order_sum_kernel(d, m, t, x, d)
    return Fraction(S, D ** d * math.factorial(d))


def order_sum_cdf_decomposed(d: int, m: int, t: RationalLike, x: RationalLike) -> Fraction:
    """The same probability summed over how many variables exceed t."""
    t, x = as_rational(t), as_rational(x)
    _check_order_args(d, m, t)
    return sum((binom(d, j) * constrained_block_prob(d, j, t, x) for j in range(m)), Fraction(0))


def _vol_A_unordered_sum(d: int, N: Fraction, m: int, t: Fraction) -> Fraction:
    """(d-1)! * d/dx of the order/sum CDF at x = N, i.e. the unordered slice density sum."""
    S, D = _order_sum_kernel(d, m, t, N, d - 1)
    return Fraction(S, D ** (d - 1))


def vol_A(d: int, N: RationalLike, m: int, t: RationalLike) -> ScaledVolume:
    """Volume of the Pauli polytope further capped by lambda_m <= t."""
    N, t = as_rational(N), as_rational(t)
    _check_order_args(d, m, t)
    if not 0 <= N <= d:
        raise PreconditionError(f"need 0 <= N <= d, got N={N}")
    s = _vol_A_unordered_sum(d, N, m, t)
    return ScaledVolume(d, s / (math.factorial(d) * math.factorial(d - 1)))


def volume(spec: PolytopeSpec) -> ScaledVolume:
    """Volume of P (no cap) or A (with cap) described by ``spec``."""
    if spec.cap is None:
        return vol_P(spec.d, spec.N)
    m, t = spec.cap
    return vol_A(spec.d, spec.N, m, t)


def pauli_unordered_density(d: int, N: RationalLike) -> Fraction:
    """d! * vol_P(d, N).coeff, the Irwin-Hall density at N (for d >= 2)."""
    return vol_P(d, N).coeff * math.factorial(d)


__all__ = [
    "ScaledVolume",
    "PolytopeSpec",
    "vol_B",
    "vol_P",
    "vol_A",
    "volume",
    "orthant_slab_vol",
    "constrained_block_prob",
    "order_sum_cdf",
    "order_sum_cdf_decomposed",
    "pauli_unordered_density",
]
