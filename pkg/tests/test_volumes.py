import math
import random
from fractions import Fraction

import pytest

from fermipoly.errors import DomainError, PreconditionError
from fermipoly.irwin_hall import ih_cdf, ih_pdf, uniform_sum_density
from fermipoly.volumes import (
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


def block_density(d, j, t):
    """Unnormalised density of the sum when j variables sit in (t, 1] and d - j in [0, t]."""
    return uniform_sum_density([(t, 1)] * j + [(0, t)] * (d - j))


def block_prob_oracle(d, j, t, x):
    if t == 1 and j > 0:
        return Fraction(0)
    return block_density(d, j, t).integral(0, x)


def random_rational(rng, lo, hi, den=12):
    q = rng.randint(1, den)
    return lo + (hi - lo) * Fraction(rng.randint(0, q), q)


# ---------------------------------------------------------------------------
# B and P
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("d,N,coeff", [(2, 1, Fraction(1, 2)), (3, 2, Fraction(1, 3)), (5, 0, 0), (1, 7, 1)])
def test_vol_B_examples(d, N, coeff):
    assert vol_B(d, N).coeff == coeff


@pytest.mark.parametrize("d,N,coeff", [(2, 1, Fraction(1, 2)), (3, 2, Fraction(1, 12)), (1, 1, 1)])
def test_vol_P_examples(d, N, coeff):
    assert vol_P(d, N).coeff == coeff


def test_vol_P_over_B_at_3_2_is_a_quarter():
    assert vol_P(3, 2) / vol_B(3, 2) == Fraction(1, 4)


def forward_difference_zero(d):
    """d-th forward difference of x^(d-1) on 0..d, computed by repeated differencing."""
    values = [Fraction(x) ** (d - 1) for x in range(d + 1)]
    for _ in range(d):
        values = [b - a for a, b in zip(values, values[1:])]
    return values[0]


@pytest.mark.parametrize("d", range(2, 15))
def test_full_filling_has_zero_volume(d):
    assert forward_difference_zero(d) == 0
    assert vol_P(d, d).coeff == 0


@pytest.mark.parametrize("d", range(2, 15))
def test_particle_hole_symmetry(d):
    for N in range(1, d):
        assert vol_P(d, N) == vol_P(d, d - N)


def test_vol_P_rational_N_uses_irwin_hall():
    for d in (3, 5, 8):
        for N in (Fraction(1, 2), Fraction(7, 3)):
            assert vol_P(d, N).coeff == ih_pdf(d, N) / math.factorial(d)
    # integer N through the same density
    assert vol_P(6, 3).coeff == ih_pdf(6, 3) / math.factorial(6)
    assert pauli_unordered_density(6, 3) == ih_pdf(6, 3)


def test_vol_P_preconditions():
    with pytest.raises(PreconditionError):
        vol_P(3, 4)
    with pytest.raises(PreconditionError):
        vol_B(0, 1)


def test_scaled_volume_ratio_and_float():
    v = vol_B(3, 2)
    assert float(v) == pytest.approx(math.sqrt(3) / 3)
    with pytest.raises(PreconditionError):
        v.ratio(vol_B(4, 2))
    with pytest.raises(DomainError):
        v.ratio(vol_B(3, 0))
    with pytest.raises(PreconditionError):
        ScaledVolume(3, Fraction(-1))


def test_unordered_segment_length():
    # d = 2, N = 1: the unordered segment has length sqrt(2), the ordered half of it sqrt(2)/2
    assert float(vol_B(2, 1)) * 2 == pytest.approx(math.sqrt(2))


# ---------------------------------------------------------------------------
# Orthant slab
# ---------------------------------------------------------------------------

def test_orthant_slab_examples():
    for d, N, t in [(4, 2, Fraction(1, 3)), (7, Fraction(5, 2), Fraction(1, 2))]:
        v = orthant_slab_vol(d, N, 0, t)
        assert v.coeff == vol_B(d, N).coeff * math.factorial(d)
        assert orthant_slab_vol(d, 2 * t, 2, t).coeff == 0
    # lambda_1 in (1/2, 1] on the segment lambda_1 + lambda_2 = 1
    assert orthant_slab_vol(2, 1, 1, Fraction(1, 2)).coeff == Fraction(1, 2)
    with pytest.raises(DomainError):
        orthant_slab_vol(3, 1, 3, Fraction(1, 2))


# ---------------------------------------------------------------------------
# Order statistics
# ---------------------------------------------------------------------------

def test_constrained_block_examples():
    assert constrained_block_prob(2, 1, Fraction(1, 2), Fraction(3, 2)) == Fraction(1, 4)
    for d in (1, 3, 6):
        for x in (Fraction(1, 2), Fraction(7, 3), Fraction(d)):
            assert constrained_block_prob(d, 0, 1, x) == ih_cdf(d, x)
    with pytest.raises(PreconditionError):
        constrained_block_prob(3, 4, Fraction(1, 2), 2)


def test_constrained_block_double_integral():
    # X1 in (1/2, 1], X2 in [0, 1/2], X1 + X2 <= x: explicit areas
    t = Fraction(1, 2)
    assert constrained_block_prob(2, 1, t, Fraction(1, 2)) == 0
    assert constrained_block_prob(2, 1, t, Fraction(3, 4)) == Fraction(1, 32)
    assert constrained_block_prob(2, 1, t, 1) == Fraction(1, 8)
    assert constrained_block_prob(2, 1, t, Fraction(5, 4)) == Fraction(1, 4) - Fraction(1, 32)


def test_constrained_block_against_convolution_oracle():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(1, 6)
        j = rng.randint(0, d)
        t = random_rational(rng, Fraction(1, 12), Fraction(1))
        x = random_rational(rng, Fraction(0), Fraction(d + 1))
        assert constrained_block_prob(d, j, t, x) == block_prob_oracle(d, j, t, x)


def test_order_sum_cdf_examples():
    for d in (2, 4, 7):
        for m in range(1, d + 1):
            for x in (Fraction(1, 3), Fraction(d, 2), Fraction(d)):
                assert order_sum_cdf(d, m, 1, x) == ih_cdf(d, x)
    t, x = Fraction(3, 5), Fraction(5, 2)
    assert order_sum_cdf(5, 2, t, x) == order_sum_cdf_decomposed(5, 2, t, x)


def test_order_sum_cdf_decomposition_random():
    rng = random.Random(2024)
    for _ in range(100):
        d = rng.randint(1, 8)
        m = rng.randint(1, d)
        t = random_rational(rng, Fraction(1, 10), Fraction(1))
        x = random_rational(rng, Fraction(0), Fraction(d))
        assert order_sum_cdf(d, m, t, x) == order_sum_cdf_decomposed(d, m, t, x)


def test_order_sum_cdf_against_convolution_oracle():
    rng = random.Random(99)
    for _ in range(30):
        d = rng.randint(2, 6)
        m = rng.randint(1, d)
        t = random_rational(rng, Fraction(1, 6), Fraction(1), den=6)
        x = random_rational(rng, Fraction(0), Fraction(d), den=6)
        oracle = sum(math.comb(d, j) * block_prob_oracle(d, j, t, x) for j in range(m))
        assert order_sum_cdf(d, m, t, x) == oracle


def test_order_sum_cdf_preconditions():
    with pytest.raises(PreconditionError):
        order_sum_cdf(3, 4, Fraction(1, 2), 1)
    with pytest.raises(PreconditionError):
        order_sum_cdf(3, 1, 0, 1)


# ---------------------------------------------------------------------------
# A
# ---------------------------------------------------------------------------

def test_vol_A_examples():
    assert vol_A(3, Fraction(3, 2), 1, Fraction(1, 2)).coeff == 0
    assert vol_A(3, 1, 1, Fraction(1, 2)).coeff == Fraction(1, 48)
    for d in (2, 5, 9):
        for N in range(1, d):
            for m in (1, d):
                assert vol_A(d, N, m, 1) == vol_P(d, N)


def test_vol_A_scaling_identity_for_m1():
    # lambda_1 <= t means every entry lies in [0, t]: a scaled Irwin-Hall slice
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randint(2, 10)
        t = random_rational(rng, Fraction(1, 10), Fraction(1))
        N = random_rational(rng, Fraction(0), d * t)
        expected = t ** (d - 1) * ih_pdf(d, N / t) / math.factorial(d)
        assert vol_A(d, N, 1, t).coeff == expected


def test_vol_A_against_convolution_density():
    rng = random.Random(17)
    for _ in range(30):
        d = rng.randint(2, 6)
        m = rng.randint(1, d)
        t = random_rational(rng, Fraction(1, 6), Fraction(1), den=6)
        N = random_rational(rng, Fraction(1, 6), Fraction(d), den=6)
        density = sum(math.comb(d, j) * block_density(d, j, t)(N) for j in range(m) if t < 1 or j == 0)
        assert vol_A(d, N, m, t).coeff == density / math.factorial(d)


def test_volume_dispatch_and_spec_validation():
    assert volume(PolytopeSpec(6, 3)) == vol_P(6, 3)
    assert volume(PolytopeSpec(6, 3, (2, "3/5"))) == vol_A(6, 3, 2, Fraction(3, 5))
    with pytest.raises(PreconditionError):
        PolytopeSpec(3, 4)
    with pytest.raises(PreconditionError):
        PolytopeSpec(3, 1, (4, Fraction(1, 2)))
    with pytest.raises(PreconditionError):
        PolytopeSpec(3, 1, (1, Fraction(3, 2)))


@pytest.mark.parametrize("d", range(2, 11))
def test_sandwich_and_monotonicity(d):
    ts = [Fraction(k, 6) for k in range(1, 7)]
    for N in range(1, d):
        p, b = vol_P(d, N).coeff, vol_B(d, N).coeff
        assert p <= b
        grid = [[vol_A(d, N, m, t).coeff for t in ts] for m in range(1, d + 1)]
        for row in grid:
            assert all(0 <= a <= p for a in row)
            assert all(x <= y for x, y in zip(row, row[1:]))
        for lower, upper in zip(grid, grid[1:]):
            assert all(x <= y for x, y in zip(lower, upper))


def test_vol_A_at_large_d_is_fast_and_bounded():
    v = vol_A(1000, 8, 1, Fraction(1, 2))
    p = vol_P(1000, 8)
    assert 0 < v.coeff < p.coeff
