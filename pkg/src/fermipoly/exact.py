"""
Exact scalars and outward-rounded intervals.

Every closed-form sum in this package is evaluated with :class:`fractions.Fraction`
(exported here as ``Rational``). Floating point only appears when a value is
rendered for humans, or inside :class:`BoundInterval`, whose endpoints are
rounded outward so the true value is always enclosed.

Intervals are thin wrappers around ``mpmath.libmp.libmpi``: those routines take
the working precision as an argument instead of reading global context state,
which keeps everything here a pure function.
"""
from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from mpmath import mp, mpf
from mpmath.libmp import (
    from_int,
    from_rational,
    libmpi,
    mpf_cmp,
    round_ceiling,
    round_floor,
    to_str,
)
from mpmath.libmp.libmpf import finf, fninf, fzero

from .errors import DomainError, PreconditionError

Rational = Fraction
RationalLike = Union[int, Fraction, str]

DEFAULT_PRECISION_BITS = 128


def as_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and strings like ``"3/5"`` or ``"0.6"`` exactly.

    Floats are rejected: a binary float is almost never the rational the
    caller meant.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside 0 <= k <= n."""
    if n < 0:
        raise PreconditionError(f"binom needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rat_floor(q: RationalLike) -> int:
    """Exact floor; integers map to themselves with no epsilon nudging."""
    q = as_rational(q)
    return q.numerator // q.denominator


def rat_ceil(q: RationalLike) -> int:
    q = as_rational(q)
    return -((-q.numerator) // q.denominator)


def format_decimal(q: RationalLike, digits: int = 12) -> str:
    """Render ``q`` with ``digits`` significant digits, correctly rounded.

    Works for rationals whose numerator and denominator have thousands of
    digits, where ``float(q)`` would underflow or lose everything.
    """
    q = as_rational(q)
    if digits < 1:
        raise PreconditionError("digits must be >= 1")
    ctx = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN, Emax=decimal.MAX_EMAX, Emin=decimal.MIN_EMIN)
    value = ctx.divide(decimal.Decimal(q.numerator), decimal.Decimal(q.denominator))
    return format(value, "g") if value.adjusted() < -6 or value.adjusted() >= digits else format(value, "f")


# ---------------------------------------------------------------------------
# Intervals
# ---------------------------------------------------------------------------

_Raw = tuple  # libmpi interval: pair of raw mpf tuples


@dataclass(frozen=True)
class BoundInterval:
    """Closed interval [lo, hi] known to contain a real value.

    ``lo`` and ``hi`` may be infinite. Every operation below rounds ``lo``
    towards -inf and ``hi`` towards +inf at ``precision_bits``.
    """

    lo: mpf
    hi: mpf
    precision_bits: int = DEFAULT_PRECISION_BITS

    def __post_init__(self) -> None:
        if self.precision_bits < 2:
            raise PreconditionError("precision_bits must be >= 2")
        if self.lo > self.hi:
            raise PreconditionError(f"empty interval [{self.lo}, {self.hi}]")

    # -- construction -------------------------------------------------------
    @classmethod
    def exact(cls, q: RationalLike, precision_bits: int = DEFAULT_PRECISION_BITS) -> "BoundInterval":
        """Tightest interval at ``precision_bits`` that contains the rational ``q``."""
        q = as_rational(q)
        lo = from_rational(q.numerator, q.denominator, precision_bits, round_floor)
        hi = from_rational(q.numerator, q.denominator, precision_bits, round_ceiling)
        return cls._from_raw((lo, hi), precision_bits)

    @classmethod
    def hull(cls, lo: RationalLike, hi: RationalLike, precision_bits: int = DEFAULT_PRECISION_BITS) -> "BoundInterval":
        a = cls.exact(lo, precision_bits)
        b = cls.exact(hi, precision_bits)
        return cls._from_raw((a._raw[0], b._raw[1]), precision_bits)

    @classmethod
    def _from_raw(cls, raw: _Raw, precision_bits: int) -> "BoundInterval":
        # make_mpf wraps the raw tuple without re-rounding to the global mp.prec
        return cls(mp.make_mpf(raw[0]), mp.make_mpf(raw[1]), precision_bits)

    @property
    def _raw(self) -> _Raw:
        return (self.lo._mpf_, self.hi._mpf_)

    def _coerce(self, other: object) -> "BoundInterval":
        if isinstance(other, BoundInterval):
            return other
        if isinstance(other, (int, Fraction, str)):
            return BoundInterval.exact(other, self.precision_bits)
        return NotImplemented  # type: ignore[return-value]

    def _prec(self, other: "BoundInterval") -> int:
        return max(self.precision_bits, other.precision_bits)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self._prec(o)
        return BoundInterval._from_raw(libmpi.mpi_add(self._raw, o._raw, p), p)

    __radd__ = __add__

    def __neg__(self):
        return BoundInterval._from_raw(libmpi.mpi_neg(self._raw, self.precision_bits), self.precision_bits)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self._prec(o)
        return BoundInterval._from_raw(libmpi.mpi_sub(self._raw, o._raw, p), p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = self._prec(o)
        return BoundInterval._from_raw(libmpi.mpi_mul(self._raw, o._raw, p), p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.lo <= 0 <= o.hi:
            raise DomainError("interval division by an interval containing 0")
        p = self._prec(o)
        return BoundInterval._from_raw(libmpi.mpi_div(self._raw, o._raw, p), p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, exponent):
        if isinstance(exponent, int):
            return self.pow_int(exponent)
        return interval_pow(self, self._coerce(exponent))

    def pow_int(self, n: int) -> "BoundInterval":
        if n < 0 and self.lo <= 0 <= self.hi:
            raise DomainError("negative power of an interval containing 0")
        return BoundInterval._from_raw(libmpi.mpi_pow_int(self._raw, n, self.precision_bits), self.precision_bits)

    def sqrt(self) -> "BoundInterval":
        if self.lo < 0:
            raise DomainError("sqrt of an interval reaching below 0")
        return BoundInterval._from_raw(libmpi.mpi_sqrt(self._raw, self.precision_bits), self.precision_bits)

    def log(self) -> "BoundInterval":
        if self.lo <= 0:
            raise DomainError("log of a non-positive interval")
        return BoundInterval._from_raw(libmpi.mpi_log(self._raw, self.precision_bits), self.precision_bits)

    def exp(self) -> "BoundInterval":
        return BoundInterval._from_raw(libmpi.mpi_exp(self._raw, self.precision_bits), self.precision_bits)

    # -- queries ------------------------------------------------------------
    def contains(self, value: Union[RationalLike, "BoundInterval"]) -> bool:
        """True if ``value`` (rational or interval) lies inside, compared exactly."""
        if isinstance(value, BoundInterval):
            return self.lo <= value.lo and value.hi <= self.hi
        q = as_rational(value)
        return _cmp_mpf_rational(self.lo._mpf_, q) <= 0 <= _cmp_mpf_rational(self.hi._mpf_, q)

    @property
    def width(self) -> mpf:
        return self.hi - self.lo

    def is_point(self) -> bool:
        return self.lo == self.hi

    def certainly_positive(self) -> bool:
        return self.lo > 0

    def certainly_nonpositive(self) -> bool:
        return self.hi <= 0

    def to_str(self, digits: int = 12) -> str:
        return f"[{to_str(self.lo._mpf_, digits)}, {to_str(self.hi._mpf_, digits)}]"

    def __repr__(self) -> str:
        return f"BoundInterval({self.to_str(20)}, precision_bits={self.precision_bits})"


def _cmp_mpf_rational(x: _Raw, q: Fraction) -> int:
    """Exact sign of (x - q) for a raw mpf endpoint x."""
    if x == finf:
        return 1
    if x == fninf:
        return -1
    if x == fzero:
        return (q < 0) - (q > 0)
    sign, man, exp, _ = x
    value = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    if sign:
        value = -value
    return (value > q) - (value < q)


def interval_pow(base: BoundInterval, exponent: BoundInterval) -> BoundInterval:
    """Enclosure of ``base ** exponent`` for a strictly positive base."""
    if not base.lo > 0:
        raise DomainError(f"interval_pow needs base.lo > 0, got {base.lo}")
    prec = max(base.precision_bits, exponent.precision_bits)
    if mpf_cmp(base.lo._mpf_, from_int(1)) == 0 and base.is_point():
        return BoundInterval.exact(1, prec)
    return BoundInterval._from_raw(libmpi.mpi_pow(base._raw, exponent._raw, prec), prec)


def interval_sqrt_rational(q: RationalLike, precision_bits: int = DEFAULT_PRECISION_BITS) -> BoundInterval:
    """Enclosure of sqrt(q); a point interval when q is a perfect rational square."""
    q = as_rational(q)
    if q < 0:
        raise DomainError("sqrt of a negative rational")
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return BoundInterval.exact(Fraction(rn, rd), precision_bits)
    return BoundInterval.exact(q, precision_bits).sqrt()
