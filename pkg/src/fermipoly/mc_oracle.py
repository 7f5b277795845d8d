"""
Monte Carlo estimates of volume ratios, used as an independent check on the
exact formulas.

Points are drawn uniformly from the unordered simplex {lambda >= 0, sum = N}
by normalising d i.i.d. standard exponentials. Since every polytope here is
permutation invariant, the ordered volume ratio equals the unordered one, so no
sorting is needed except to read off the m-th largest entry.

Work is split into fixed-size chunks. Chunk ``k`` draws from its own generator
seeded by ``SeedSequence(seed, spawn_key=(k,))``, and only integer counts leave
a chunk, so the result is bit-identical for any number of workers.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import DomainError, PreconditionError
from .exact import RationalLike, as_rational

CHUNK_SIZE = 1 << 16


@dataclass(frozen=True)
class McEstimate:
    """Fraction ``accepted / effective`` with its binomial standard error.

    ``samples`` counts all simplex draws. ``effective`` is the size of the
    population the fraction is taken over: all draws for the Pauli fraction,
    only the Pauli-admissible ones for conditional fractions.
    """

    mean: float
    stderr: float
    samples: int
    accepted: int
    seed: int
    effective: int

    def __post_init__(self) -> None:
        if not 0 <= self.accepted <= self.effective <= self.samples:
            raise PreconditionError("need 0 <= accepted <= effective <= samples")


def _estimate(accepted: int, effective: int, samples: int, seed: int) -> McEstimate:
    if effective == 0:
        raise DomainError("no admissible samples: the conditional fraction is undefined")
    mean = accepted / effective
    return McEstimate(mean, math.sqrt(mean * (1 - mean) / effective), samples, accepted, seed, effective)


def sample_simplex_point(d: int, N: RationalLike, rng: np.random.Generator) -> np.ndarray:
    """One uniform point of {lambda in R^d : lambda >= 0, sum = N}."""
    N = as_rational(N)
    if d < 1 or N <= 0:
        raise PreconditionError(f"need d >= 1 and N > 0, got d={d}, N={N}")
    return _simplex_block(d, float(N), 1, rng)[0]


def _simplex_block(d: int, n: float, rows: int, rng: np.random.Generator) -> np.ndarray:
    e = rng.standard_exponential((rows, d))
    # divide first: e / sum <= 1 holds exactly in floating point
    return (e / e.sum(axis=1, keepdims=True)) * n


def _check_seed(seed: int) -> int:
    if not 0 <= seed < 1 << 64:
        raise PreconditionError("seed must be a 64-bit unsigned integer")
    return seed


ChunkCounter = Callable[[np.ndarray], Tuple[int, int]]


def _run_chunks(d: int, N: Fraction, samples: int, seed: int, counter: ChunkCounter,
                workers: Optional[int]) -> Tuple[int, int]:
    if samples < 1:
        raise PreconditionError("samples must be positive")
    n = float(N)
    sizes = [min(CHUNK_SIZE, samples - start) for start in range(0, samples, CHUNK_SIZE)]

    def run(k: int) -> Tuple[int, int]:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(k,))))
        return counter(_simplex_block(d, n, sizes[k], rng))

    if workers is None or workers <= 1:
        results = [run(k) for k in range(len(sizes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(len(sizes))))
    return sum(r[0] for r in results), sum(r[1] for r in results)


def estimate_pauli_fraction(d: int, N: RationalLike, samples: int, seed: int,
                            workers: Optional[int] = None) -> McEstimate:
    """Estimate Vol(P)/Vol(B) = P[max lambda <= 1] for lambda uniform on the simplex."""
    N = as_rational(N)
    if not 1 <= N <= d:
        raise PreconditionError(f"need 1 <= N <= d, got d={d}, N={N}")
    seed = _check_seed(seed)

    def count(block: np.ndarray) -> Tuple[int, int]:
        return int(np.count_nonzero(block.max(axis=1) <= 1.0)), block.shape[0]

    accepted, effective = _run_chunks(d, N, samples, seed, count, workers)
    return _estimate(accepted, effective, samples, seed)


def estimate_order_fraction(d: int, N: RationalLike, m: int, t: RationalLike, samples: int, seed: int,
                            workers: Optional[int] = None) -> McEstimate:
    """Estimate Vol(A)/Vol(P): among draws with max <= 1, the share whose m-th largest entry is <= t."""
    N, t = as_rational(N), as_rational(t)
    if not 1 <= m <= d or not 0 < t <= 1:
        raise PreconditionError(f"need 1 <= m <= d and 0 < t <= 1, got m={m}, t={t}")
    if not 0 < N <= d:
        raise PreconditionError(f"need 0 < N <= d, got N={N}")
    seed = _check_seed(seed)
    tf = float(t)

    def count(block: np.ndarray) -> Tuple[int, int]:
        pauli = block[block.max(axis=1) <= 1.0]
        # ascending position d - m holds the m-th largest entry
        mth = np.partition(pauli, d - m, axis=1)[:, d - m]
        return int(np.count_nonzero(mth <= tf)), pauli.shape[0]

    accepted, effective = _run_chunks(d, N, samples, seed, count, workers)
    return _estimate(accepted, effective, samples, seed)


def agrees(estimate: McEstimate, exact: RationalLike, sigmas: float = 4.0, tail: float = 1e-4) -> bool:
    """Whether an estimate is statistically consistent with an exact probability.

    The usual test |mean - exact| <= sigmas * stderr is used when some but not
    all draws were accepted. If the count sits at 0 or at ``effective`` the
    plug-in standard error is 0, so instead the exact binomial probability of
    that extreme count is required to be at least ``tail``.
    """
    p = as_rational(exact)
    if not 0 <= p <= 1:
        raise PreconditionError("exact probability must lie in [0, 1]")
    n, k = estimate.effective, estimate.accepted
    if 0 < k < n:
        return abs(estimate.mean - float(p)) <= sigmas * estimate.stderr
    q = float(p) if k == n else float(1 - p)
    # q ** n computed in logs so that tiny q does not underflow to a false pass
    if q <= 0:
        return False
    return n * math.log(q) >= math.log(tail)


__all__ = [
    "CHUNK_SIZE",
    "McEstimate",
    "sample_simplex_point",
    "estimate_pauli_fraction",
    "estimate_order_fraction",
    "agrees",
]
