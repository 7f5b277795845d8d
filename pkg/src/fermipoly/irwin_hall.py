"""
Irwin-Hall distribution: the law of X_1 + ... + X_d for X_i ~ U(0, 1) i.i.d.

Closed forms are alternating binomial sums evaluated in exact rationals. An
independent route, :func:`ih_pdf_oracle`, builds the same density by repeated
symbolic convolution of piecewise polynomials; the two are compared bit for bit
in the test-suite.

>>> from fractions import Fraction
>>> ih_cdf(2, Fraction(1, 2))
Fraction(1, 8)
>>> ih_pdf(3, Fraction(3, 2))
Fraction(3, 4)
"""
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import PreconditionError
from .exact import RationalLike, as_rational, binom, rat_floor

Poly = Tuple[Fraction, ...]  # coefficients in ascending powers of x

ORACLE_MAX_D = 16


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def ih_cdf(d: int, x: RationalLike) -> Fraction:
    """P[X_1 + ... + X_d <= x], exactly; 0 left of the support and 1 right of it."""
    if d < 1:
        raise PreconditionError(f"ih_cdf needs d >= 1, got {d}")
    x = as_rational(x)
    if x <= 0:
        return Fraction(0)
    if x >= d:
        return Fraction(1)
    total = sum((-1) ** k * binom(d, k) * (x - k) ** d for k in range(rat_floor(x) + 1))
    return total / math.factorial(d)


def ih_pdf(d: int, x: RationalLike) -> Fraction:
    """Density of the sum of ``d`` uniforms at ``x``; zero outside [0, d]."""
    if d < 2:
        raise PreconditionError(f"ih_pdf needs d >= 2, got {d}")
    x = as_rational(x)
    if x < 0 or x > d:
        return Fraction(0)
    total = sum((-1) ** k * binom(d, k) * (x - k) ** (d - 1) for k in range(rat_floor(x) + 1))
    return total / math.factorial(d - 1)


# ---------------------------------------------------------------------------
# Piecewise polynomials (the convolution oracle)
# ---------------------------------------------------------------------------

def _poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_shift(p: Poly, c: Fraction) -> Poly:
    """Coefficients of q(x) = p(x - c)."""
    out = [Fraction(0)] * len(p)
    for n, a in enumerate(p):
        if not a:
            continue
        for k in range(n + 1):
            out[k] += a * math.comb(n, k) * (-c) ** (n - k)
    return tuple(out)


def _poly_antiderivative(p: Poly) -> Poly:
    return (Fraction(0),) + tuple(a / (n + 1) for n, a in enumerate(p))


def _poly_add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    n = max(len(p), len(q))
    p = p + (Fraction(0),) * (n - len(p))
    q = q + (Fraction(0),) * (n - len(q))
    return tuple(a + sign * b for a, b in zip(p, q))


@dataclass(frozen=True)
class PiecewisePoly:
    """A function that is polynomial on each [b_i, b_{i+1}) and zero outside [b_0, b_n].

    Pieces are stored with coefficients in absolute powers of x. Evaluation at
    an interior breakpoint uses the piece to its right; the last piece also
    covers its right endpoint.
    """

    breakpoints: Tuple[Fraction, ...]
    pieces: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.breakpoints) != len(self.pieces) + 1:
            raise PreconditionError("need exactly one more breakpoint than pieces")
        if any(a >= b for a, b in zip(self.breakpoints, self.breakpoints[1:])):
            raise PreconditionError("breakpoints must be strictly increasing")

    @classmethod
    def indicator(cls, lo: RationalLike, hi: RationalLike) -> "PiecewisePoly":
        lo, hi = as_rational(lo), as_rational(hi)
        return cls((lo, hi), ((Fraction(1),),))

    @property
    def support(self) -> Tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        lo, hi = self.support
        if x < lo or x > hi:
            return Fraction(0)
        idx = min(bisect_right(self.breakpoints, x) - 1, len(self.pieces) - 1)
        return _poly_eval(self.pieces[idx], x)

    def _antiderivative_pieces(self) -> Tuple[Poly, ...]:
        """Antiderivative pieces, continuous and vanishing at the left end of the support."""
        out = []
        level = Fraction(0)
        for a, b, p in zip(self.breakpoints, self.breakpoints[1:], self.pieces):
            q = _poly_antiderivative(p)
            q = _poly_add(q, (level - _poly_eval(q, a),))
            out.append(q)
            level = _poly_eval(q, b)
        return tuple(out)

    def total(self) -> Fraction:
        anti = self._antiderivative_pieces()
        return _poly_eval(anti[-1], self.breakpoints[-1])

    def _antiderivative_at(self, anti: Sequence[Poly], x: Fraction) -> Fraction:
        lo, hi = self.support
        if x <= lo:
            return Fraction(0)
        if x >= hi:
            return _poly_eval(anti[-1], hi)
        idx = bisect_right(self.breakpoints, x) - 1
        return _poly_eval(anti[idx], x)

    def integral(self, a: RationalLike, b: RationalLike) -> Fraction:
        """Exact integral over [a, b] (signed when b < a)."""
        a, b = as_rational(a), as_rational(b)
        anti = self._antiderivative_pieces()
        return self._antiderivative_at(anti, b) - self._antiderivative_at(anti, a)

    def convolve_indicator(self, lo: RationalLike, hi: RationalLike) -> "PiecewisePoly":
        """Convolution with the indicator of [lo, hi]: x -> integral of f over [x - hi, x - lo]."""
        lo, hi = as_rational(lo), as_rational(hi)
        if lo >= hi:
            raise PreconditionError("indicator needs lo < hi")
        anti = self._antiderivative_pieces()
        total = _poly_eval(anti[-1], self.breakpoints[-1])
        s_lo, s_hi = self.support
        new_bps = tuple(sorted({b + lo for b in self.breakpoints} | {b + hi for b in self.breakpoints}))

        def shifted_piece(shift: Fraction, mid: Fraction) -> Poly:
            # F(x - shift) as a polynomial in x, valid on the current sub-interval
            y = mid - shift
            if y <= s_lo:
                return (Fraction(0),)
            if y >= s_hi:
                return (total,)
            idx = bisect_right(self.breakpoints, y) - 1
            return _poly_shift(anti[idx], shift)

        pieces = []
        for u, v in zip(new_bps, new_bps[1:]):
            mid = (u + v) / 2
            pieces.append(_poly_add(shifted_piece(lo, mid), shifted_piece(hi, mid), sign=-1))
        return PiecewisePoly(new_bps, tuple(pieces))


def uniform_sum_density(intervals: Iterable[Tuple[RationalLike, RationalLike]]) -> PiecewisePoly:
    """Density of a sum of independent uniforms on the given intervals.

    Each factor is the *unnormalised* indicator of its interval, so the result
    integrates to the product of the interval lengths. Used as an oracle for
    probabilities of the form P[X_1..X_j > t, X_{j+1}..X_d <= t, sum <= x].
    """
    intervals = [(as_rational(a), as_rational(b)) for a, b in intervals]
    if not intervals:
        raise PreconditionError("need at least one interval")
    f = PiecewisePoly.indicator(*intervals[0])
    for a, b in intervals[1:]:
        f = f.convolve_indicator(a, b)
    return f


def ih_pdf_oracle(d: int) -> PiecewisePoly:
    """Irwin-Hall density built from d - 1 explicit convolutions with 1_[0,1]."""
    if not 2 <= d <= ORACLE_MAX_D:
        raise PreconditionError(f"oracle supports 2 <= d <= {ORACLE_MAX_D}, got {d}")
    return uniform_sum_density([(0, 1)] * d)


# ---------------------------------------------------------------------------
# Properties used by the volume estimates
# ---------------------------------------------------------------------------

def check_monotone_ratio(d: int, grid: Sequence[RationalLike]) -> bool:
    """True iff x -> ih_pdf(d, x) / x**(d-1) never increases along ``grid``."""
    if d < 3:
        raise PreconditionError(f"monotone-ratio check needs d >= 3, got {d}")
    xs = [as_rational(x) for x in grid]
    if not xs:
        raise PreconditionError("grid is empty")
    if xs[0] <= 0:
        raise PreconditionError("grid points must be positive")
    if any(a >= b for a, b in zip(xs, xs[1:])):
        raise PreconditionError("grid must be strictly increasing")
    values = [ih_pdf(d, x) / x ** (d - 1) for x in xs]
    return all(b <= a for a, b in zip(values, values[1:]))


def vol_P_lower_bound(d: int, N: int) -> Fraction:
    """Chebyshev-based lower bound (1/2)(2N/d)^(d-1) on the unordered Pauli slice volume / sqrt(d)."""
    if d < 7 or not 1 <= N or 2 * N > d:
        raise PreconditionError(f"lower bound needs d >= 7 and 1 <= N <= d/2, got d={d}, N={N}")
    return Fraction(1, 2) * Fraction(2 * N, d) ** (d - 1)
