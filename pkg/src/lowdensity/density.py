"""Signal density measures and structured signal generators.

The central measure is the delta-density

    delta(x) = ||x||_1 / ||x||_inf,

with delta(0) = 0 by convention.  It satisfies 0 <= delta(x) <= ||x||_0 <= N,
with delta(x) = ||x||_0 exactly when all nonzero entries share the same
modulus.  Two companion measures, gamma(x) = ||x||_2^2 / ||x||_inf^2 and
sigma(x) = ||x||_1^2 / ||x||_2^2, obey the same chain and are reported for
comparison; no recovery guarantees are attached to them here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Signal, SignalLike, as_signal
from .errors import AlphaOutOfRangeError, KOutOfRangeError


@dataclass(frozen=True)
class DensityReport:
    """All density measures of one signal, evaluated consistently.

    Attributes
    ----------
    delta : float
        ||x||_1 / ||x||_inf, the delta-density.
    gamma : float
        ||x||_2^2 / ||x||_inf^2.
    sigma : float
        ||x||_1^2 / ||x||_2^2.
    sparsity : int
        Number of exactly nonzero entries.
    dim : int
        Signal length.
    """

    delta: float
    gamma: float
    sigma: float
    sparsity: int
    dim: int


@dataclass(frozen=True)
class TriangleCounterexample:
    """Densities of x, z and x + z for the triangle-inequality counterexample."""

    delta_x: float
    delta_z: float
    delta_sum: float


def delta_density(x: SignalLike) -> float:
    """Return delta(x) = ||x||_1 / ||x||_inf, with delta(0) = 0."""
    v = as_signal(x).entries
    mags = np.abs(v)
    peak = mags.max() if mags.size else 0.0
    if peak == 0.0:
        return 0.0
    return float(mags.sum() / peak)


def sparsity(x: SignalLike, zero_tol: float = 0.0) -> int:
    """Count entries with modulus strictly above zero_tol (default: exact zeros)."""
    if zero_tol < 0.0:
        raise ValueError(f"zero_tol must be nonnegative, got {zero_tol}")
    v = as_signal(x).entries
    return int(np.count_nonzero(np.abs(v) > zero_tol))


def density_report(x: SignalLike) -> DensityReport:
    """Evaluate delta, gamma, sigma and the sparsity of one signal."""
    sig = as_signal(x)
    mags = np.abs(sig.entries)
    peak = float(mags.max()) if mags.size else 0.0
    if peak == 0.0:
        return DensityReport(0.0, 0.0, 0.0, 0, sig.dim)
    l1 = float(mags.sum())
    sq = float(np.square(mags).sum())
    return DensityReport(
        delta=l1 / peak,
        gamma=sq / (peak * peak),
        sigma=(l1 * l1) / sq,
        sparsity=int(np.count_nonzero(mags)),
        dim=sig.dim,
    )


def make_alpha_decaying(n: int, alpha: float) -> Signal:
    """Build the decaying signal x_i = alpha**i for i = 0..n-1.

    Requires 0 < alpha < 1 - 1/n, which keeps delta(x) <= 1/(1-alpha) < n.
    """
    if n < 2:
        raise AlphaOutOfRangeError(f"no admissible alpha exists for n={n}; need n >= 2")
    if not (0.0 < alpha < 1.0 - 1.0 / n):
        raise AlphaOutOfRangeError(
            f"alpha={alpha} outside (0, 1 - 1/{n}) = (0, {1.0 - 1.0 / n})"
        )
    return Signal(alpha ** np.arange(n, dtype=np.float64))


def truncate_to_largest(x: SignalLike, k: int) -> Signal:
    """Zero all but the k largest-modulus entries; ties keep the lowest index."""
    sig = as_signal(x)
    if not 0 <= k <= sig.dim:
        raise KOutOfRangeError(f"k={k} outside [0, {sig.dim}]")
    out = np.zeros(sig.dim, dtype=np.complex128)
    # stable sort on -|x| makes equal-modulus ties resolve to lower indices
    keep = np.argsort(-np.abs(sig.entries), kind="stable")[:k]
    out[keep] = sig.entries[keep]
    return Signal(out)


def triangle_counterexample(alpha: float, epsilon: float, n: int) -> TriangleCounterexample:
    """Show delta is not subadditive: delta(x + z) can exceed delta(x) + delta(z).

    Construction: x_i = -alpha**i and z_i = alpha**i + epsilon, so that
    x + z = epsilon * ones.  The densities have closed forms,

        delta(x)   = (1 - alpha**n) / (1 - alpha)
        delta(z)   = (delta(x) + n*epsilon) / (1 + epsilon)
        delta(x+z) = n   (for epsilon > 0; 0 when epsilon = 0),

    which are what this returns; evaluating delta on the constructed vectors
    agrees to roundoff.
    """
    if not (0.0 < alpha < 1.0):
        raise AlphaOutOfRangeError(f"alpha={alpha} outside (0, 1)")
    if epsilon < 0.0:
        raise ValueError(f"epsilon must be nonnegative, got {epsilon}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    delta_x = (1.0 - alpha**n) / (1.0 - alpha)
    delta_z = (delta_x + n * epsilon) / (1.0 + epsilon)
    delta_sum = float(n) if epsilon > 0.0 else 0.0
    return TriangleCounterexample(delta_x=delta_x, delta_z=delta_z, delta_sum=delta_sum)
