"""Closed-form capacity and error-bound evaluation, plus a DMC solver.

The syndrome side channel under symbol-symmetric corruption is an m-ary
symmetric channel with m = 2^(n-k); its capacity has the closed form
implemented by `capacity_psc`. The alternating-maximization solver
`dmc_capacity` handles arbitrary transition matrices and doubles as an
independent check of the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_ROW_SUM_TOL = 1e-12


def binary_entropy(p: float) -> float:
    """h(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def uniform_error_point(n_minus_k: int) -> float:
    """Corruption probability where the channel output becomes uniform."""
    m = 1 << n_minus_k
    return (m - 1) / m


def capacity_psc(n_minus_k: int, p_psc: float, clamp: bool = False) -> float:
    """Bits per q-codeword: n-k - h(p) - p log2(2^(n-k) - 1).

    Returns the raw algebraic value. Its minimum is exactly zero at the
    uniform point (m-1)/m and it rises again beyond it; clamp=True floors
    the floating-point dust that can dip below zero near the minimum.
    Callers that report sweeps flag points beyond `uniform_error_point`.
    """
    if n_minus_k < 1:
        raise ValueError(f"n - k must be >= 1, got {n_minus_k}")
    m = 1 << n_minus_k
    value = n_minus_k - binary_entropy(p_psc) - p_psc * math.log2(m - 1)
    return max(value, 0.0) if clamp else value


def capacity_lower_bound_depolarizing(n: int, n_minus_k: int, p_d: float) -> float:
    """Guaranteed capacity under depolarizing noise of strength p_d.

    The corruption probability is at most 1 - (1-p_d)^n (any channel error
    at all), capped at the uniform point where the closed form bottoms out.
    """
    if not 0.0 <= p_d <= 1.0:
        raise ValueError(f"p_d must be in [0, 1], got {p_d}")
    p_bound = min(1.0 - (1.0 - p_d) ** n, uniform_error_point(n_minus_k))
    return capacity_psc(n_minus_k, p_bound)


def max_rate(n_minus_k: int, p_psc: float) -> float:
    """Largest usable classical code rate K/N at the given corruption level.

    Identically capacity_psc / (n - k).
    """
    return capacity_psc(n_minus_k, p_psc) / n_minus_k


def qep_upper_bound(N: int, T: int, p_psc: float) -> float:
    """Binomial upper tail P(more than T of N symbols corrupted).

    Accumulated from the largest term count downward in log space, so
    values around 1e-12 keep full relative precision.
    """
    if not 0 <= T <= N:
        raise ValueError(f"need 0 <= T <= N, got T={T}, N={N}")
    if not 0.0 <= p_psc <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p_psc}")
    if T == N:
        return 0.0
    if p_psc == 0.0:
        return 0.0
    if p_psc == 1.0:
        return 1.0
    log_p = math.log(p_psc)
    log_q = math.log1p(-p_psc)
    log_sum = -math.inf
    for count in range(N, T, -1):
        log_term = (
            math.lgamma(N + 1) - math.lgamma(count + 1) - math.lgamma(N - count + 1)
            + count * log_p + (N - count) * log_q
        )
        if log_sum == -math.inf:
            log_sum = log_term
        else:
            bigger, smaller = max(log_sum, log_term), min(log_sum, log_term)
            log_sum = bigger + math.log1p(math.exp(smaller - bigger))
    return min(math.exp(log_sum), 1.0)


def symmetric_transition_matrix(m: int, p: float) -> np.ndarray:
    """m-ary symmetric channel: stay with 1-p, else uniform over the rest."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    tm = np.full((m, m), p / (m - 1))
    np.fill_diagonal(tm, 1.0 - p)
    return tm


def validate_transition_matrix(tm: np.ndarray) -> np.ndarray:
    """Check row-stochasticity; returns the matrix as a float array."""
    tm = np.asarray(tm, dtype=float)
    if tm.ndim != 2 or tm.shape[0] < 2:
        raise ValueError(f"transition matrix must be 2-D with >= 2 inputs, got {tm.shape}")
    if (tm < 0).any():
        raise ValueError("transition matrix has negative entries")
    bad = np.flatnonzero(np.abs(tm.sum(axis=1) - 1.0) > _ROW_SUM_TOL)
    if bad.size:
        raise ValueError(f"rows {bad.tolist()} do not sum to 1 within {_ROW_SUM_TOL}")
    return tm


def dmc_capacity(
    tm: np.ndarray, tolerance: float = 1e-9, max_iterations: int = 100_000
) -> tuple[float, np.ndarray]:
    """Capacity in bits of a discrete memoryless channel, with its input law.

    Alternating maximization over the input distribution; iteration stops
    when the standard capacity bracket (achieved mutual information vs the
    max per-input divergence) is narrower than `tolerance`.
    """
    tm = validate_transition_matrix(tm)
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    n_in = tm.shape[0]
    r = np.full(n_in, 1.0 / n_in)
    support = tm > 0
    log_tm = np.where(support, np.log(np.where(support, tm, 1.0)), 0.0)
    i_lower = 0.0
    for _ in range(max_iterations):
        q = r @ tm
        ratio = np.where(support, log_tm - np.log(np.where(q > 0, q, 1.0)), 0.0)
        divergence = (np.where(support, tm, 0.0) * ratio).sum(axis=1)
        i_lower = float(r @ divergence)
        i_upper = float(divergence.max())
        if i_upper - i_lower < tolerance * math.log(2.0):
            break
        r = r * np.exp(divergence - divergence.max())
        r /= r.sum()
    return i_lower / math.log(2.0), r


@dataclass(frozen=True)
class CapacityPoint:
    """One point of a capacity sweep."""

    p_psc: float
    c_psc: float
    n_minus_k: int
    beyond_uniform: bool = False

    def __post_init__(self) -> None:
        if not self.beyond_uniform and not 0.0 <= self.c_psc <= self.n_minus_k:
            raise ValueError(f"capacity {self.c_psc} outside [0, {self.n_minus_k}]")


def capacity_sweep(n_minus_k: int, p_values) -> list[CapacityPoint]:
    """Evaluate the closed form over a grid, flagging out-of-domain points."""
    cutoff = uniform_error_point(n_minus_k)
    return [
        CapacityPoint(
            p_psc=p,
            c_psc=capacity_psc(n_minus_k, p),
            n_minus_k=n_minus_k,
            beyond_uniform=p > cutoff,
        )
        for p in p_values
    ]
