"""
Extreme points of the bosonic and Pauli polytopes, and which of them are
reachable by fermionic 1-body density matrices.

Membership in the true fermionic polytope F_{d,N} is only decided for the point
families whose status is known in closed form: extreme points of P_{d,N}
(reduced to existence of locally maximally entangled, "LME", states) and the
interpolation points used to show that the capped polytope A_{d,N,m,t} lies
inside F_{d,N}. There is no general membership test here.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import DomainError, PreconditionError
from .exact import RationalLike, as_rational, binom, rat_floor

Vector = Tuple[Fraction, ...]


class PointKind(enum.Enum):
    SLATER = "Slater"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class ExtremePoint:
    """Extreme point of P_{d,N} with ``ones`` entries equal to 1 and ``zeros`` equal to 0."""

    d: int
    N: int
    ones: int
    zeros: int
    kind: PointKind = PointKind.INTERIOR

    def __post_init__(self) -> None:
        d, N, i, j = self.d, self.N, self.ones, self.zeros
        if not 1 <= N <= d:
            raise PreconditionError(f"need 1 <= N <= d, got d={d}, N={N}")
        if self.kind is PointKind.SLATER:
            if (i, j) != (N, d - N):
                raise PreconditionError("the Slater point has N ones and d - N zeros")
        elif not (0 <= i <= N - 1 and 0 <= j <= d - N - 1):
            raise PreconditionError(f"interior point needs 0 <= i <= N-1, 0 <= j <= d-N-1, got ({i}, {j})")

    @property
    def fill(self) -> Optional[Fraction]:
        """Common value of the entries strictly between 0 and 1 (None for the Slater point)."""
        if self.kind is PointKind.SLATER:
            return None
        return Fraction(self.N - self.ones, self.d - self.ones - self.zeros)

    def vector(self) -> Vector:
        if self.kind is PointKind.SLATER:
            return (Fraction(1),) * self.N + (Fraction(0),) * (self.d - self.N)
        middle = self.d - self.ones - self.zeros
        return (Fraction(1),) * self.ones + (self.fill,) * middle + (Fraction(0),) * self.zeros

    @property
    def index(self) -> Tuple[int, int]:
        return (self.ones, self.zeros)


class Reason(enum.Enum):
    SLATER = "Slater"
    LME_EXISTS = "LME-exists"
    LME_ABSENT = "LME-absent"


@dataclass(frozen=True)
class MembershipVerdict:
    in_F: bool
    reason: Reason


class DimKind(enum.Enum):
    EMPTY = "Empty"
    POINT = "Point"
    EXISTS_ONLY = "ExistsOnly"
    VALUE = "Value"


@dataclass(frozen=True)
class DimResult:
    """Dimension of the LME moduli space modulo SU(d).

    EMPTY stands for dimension -1, POINT for 0, EXISTS_ONLY for cases where only
    existence (dimension >= 0) is known.
    """

    kind: DimKind
    value: Optional[int] = None

    def as_int(self) -> Optional[int]:
        return {DimKind.EMPTY: -1, DimKind.POINT: 0}.get(self.kind, self.value)


# ---------------------------------------------------------------------------
# Extreme points
# ---------------------------------------------------------------------------

def extreme_points_P(d: int, N: int) -> List[ExtremePoint]:
    """The Slater point followed by the N(d-N) interior points, in (i, j) order."""
    if not 1 <= N <= d:
        raise PreconditionError(f"need 1 <= N <= d, got d={d}, N={N}")
    points = [ExtremePoint(d, N, N, d - N, PointKind.SLATER)]
    points += [ExtremePoint(d, N, i, j) for i in range(N) for j in range(d - N)]
    return points


def extreme_points_B(d: int, N: RationalLike) -> List[Vector]:
    """Vertices (N/k, ..., N/k, 0, ..., 0) of the bosonic simplex, k = 1..d."""
    N = as_rational(N)
    if d < 1 or N <= 0:
        raise PreconditionError(f"need d >= 1 and N > 0, got d={d}, N={N}")
    return [(N / k,) * k + (Fraction(0),) * (d - k) for k in range(1, d + 1)]


# ---------------------------------------------------------------------------
# LME states
# ---------------------------------------------------------------------------

def lme_exists(d: int, N: int) -> bool:
    """Whether a fermionic LME state exists in the N-particle space over C^d.

    d = 0 is accepted as the trivial one-dimensional space.
    """
    if d < 0 or not 0 <= N <= d:
        raise PreconditionError(f"need 0 <= N <= d, got d={d}, N={N}")
    if d >= 2 and N in (1, d - 1):
        return False
    if d % 2 == 1 and N in (2, d - 2):
        return False
    return True


def lme_moduli_dim(d: int, N: int) -> DimResult:
    if d < 0 or not 0 <= N <= d:
        raise PreconditionError(f"need 0 <= N <= d, got d={d}, N={N}")
    if N in (0, d):
        return DimResult(DimKind.POINT)
    # from here on 1 <= N <= d - 1, hence d >= 2
    if N in (1, d - 1):
        return DimResult(DimKind.EMPTY)
    if N in (2, d - 2):
        return DimResult(DimKind.POINT if d % 2 == 0 else DimKind.EMPTY)
    if (d, N) in {(6, 3), (7, 3), (7, 4), (8, 3), (8, 5)}:
        return DimResult(DimKind.EXISTS_ONLY)
    # remaining: (8, 4) or d >= 9 with 3 <= N <= d - 3
    return DimResult(DimKind.VALUE, binom(d, N) - d * d)


def rep_index(d: int, N: int) -> Fraction:
    """Index of the representation of SL(d) on the N-particle fermionic space."""
    if d < 3 or not 1 <= N <= d - 1:
        raise PreconditionError(f"need d >= 3 and 1 <= N <= d-1, got d={d}, N={N}")
    return Fraction(binom(d - 2, N - 1), 2 * d)


def point_in_F(p: ExtremePoint) -> MembershipVerdict:
    """Split off the ones and drop the zeros; what remains is uniform, i.e. an LME question."""
    if p.kind is PointKind.SLATER:
        return MembershipVerdict(True, Reason.SLATER)
    exists = lme_exists(p.d - p.ones - p.zeros, p.N - p.ones)
    return MembershipVerdict(exists, Reason.LME_EXISTS if exists else Reason.LME_ABSENT)


# ---------------------------------------------------------------------------
# The capped polytope A_{d,N,m,t}
# ---------------------------------------------------------------------------

def threshold_t(N: int, m: int) -> Fraction:
    """Cap value t = (N-m+1)/(N-m+9) for which lambda_m <= t keeps P inside F."""
    if not 1 <= m <= N - 7:
        raise DomainError(f"threshold needs 1 <= m <= N - 7, got N={N}, m={m}")
    return Fraction(N - m + 1, N - m + 9)


def a_subset_F_certificate(d: int, N: int, m: int) -> bool:
    return 8 <= N and 2 * N <= d and 1 <= m <= N - 7


def _j_bound(d: int, N: int, i: int, t: Fraction) -> int:
    return rat_floor(d - i - Fraction(N - i) / t)


def extreme_points_in_A(d: int, N: int, m: int, t: RationalLike) -> List[ExtremePoint]:
    """Extreme points of P that satisfy lambda_m <= t (the Slater point never does)."""
    t = as_rational(t)
    if not a_subset_F_certificate(d, N, m) or t != threshold_t(N, m):
        raise PreconditionError(f"need 8 <= N <= d/2, 1 <= m <= N-7 and t = threshold; got d={d}, N={N}, m={m}, t={t}")
    out = []
    for i in range(m):
        for j in range(min(_j_bound(d, N, i, t), d - N - 1) + 1):
            out.append(ExtremePoint(d, N, i, j))
    return out


def admissible_caps(d: int, N: int, i: int, j: int) -> List[int]:
    """All m for which extreme point (i, j) lies in A_{d,N,m,threshold_t(N,m)}."""
    if not (8 <= N and 2 * N <= d):
        return []
    return [m for m in range(i + 1, N - 6) if 0 <= j <= _j_bound(d, N, i, threshold_t(N, m))]


@dataclass(frozen=True)
class InterpolationPoint:
    """A point of F on the segment from extreme point ``start`` to ``target``.

    ``proved`` is True only for the first family, whose membership argument is
    written out in full; the other three follow the same pattern.
    """

    vector: Vector
    start: Tuple[int, int]
    target: Tuple[int, int]
    family: int
    proved: bool


def interpolation_points(d: int, N: int, i: int, j: int) -> List[InterpolationPoint]:
    """Four points of F built from a Slater part and two LME blocks.

    They sit on the segments from (i, j) towards the problematic extreme points
    (N-1, j), (N-2, j), (i, d-N-1) and (i, d-N-2).
    """
    if not admissible_caps(d, N, i, j):
        raise PreconditionError(f"(i, j) = ({i}, {j}) is not an extreme point of any admissible A for d={d}, N={N}")
    n = N - i
    e = d - N - j
    one, zero = Fraction(1), Fraction(0)

    def build(high_count: int, high_num: int, low_count: int, low_num: int) -> Vector:
        high = Fraction(high_num, high_count)
        low = Fraction(low_num, low_count)
        return (one,) * i + (high,) * high_count + (low,) * low_count + (zero,) * j

    specs = [
        (build(n - 1, n - 4, e + 1, 4), (N - 1, j)),
        (build(n - 2, n - 5, e + 2, 5), (N - 2, j)),
        (build(n + 1, n - 3, e - 1, 3), (i, d - N - 1)),
        (build(n + 2, n - 3, e - 2, 3), (i, d - N - 2)),
    ]
    return [
        InterpolationPoint(vec, (i, j), target, family, proved=(family == 1))
        for family, (vec, target) in enumerate(specs, start=1)
    ]


def segment_parameter(point: Sequence[Fraction], a: Sequence[Fraction], b: Sequence[Fraction]) -> Optional[Fraction]:
    """mu with point = mu*a + (1-mu)*b, or None if the point is not on the line through a and b."""
    if not len(point) == len(a) == len(b):
        raise PreconditionError("vectors must have equal length")
    mu = None
    for x, u, v in zip(point, a, b):
        if u != v:
            mu = (x - v) / (u - v)
            break
    if mu is None:
        return Fraction(1) if tuple(point) == tuple(a) else None
    if all(x == mu * u + (1 - mu) * v for x, u, v in zip(point, a, b)):
        return mu
    return None
