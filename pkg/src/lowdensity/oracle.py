"""Brute-force verifiers for the certificates and the solver.

These are independent of the code they check: the kernel probe searches for
low-density nullspace vectors by random sampling plus local descent, and the
exhaustive recovery oracle enumerates every candidate support.  The probe is a
falsifier, not a certified global minimizer; finding no counterexample is
evidence, not proof.  The enumerator is exact on instances small enough to
enumerate.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .coherence import coherence
from .core import Dictionary, Rng, Signal, SignalLike, SupportSet, as_signal, check_measurement_matches
from .errors import KOutOfRangeError, TooLargeError, TrivialKernelError

NULLSPACE_RANK_TOL = 1e-10
MAX_SUPPORT_EVALS = 10**7
_PROBE_BATCH = 512


@dataclass(frozen=True)
class KernelProbeResult:
    """Lowest delta-density found over random nullspace vectors.

    Attributes
    ----------
    min_delta_found : float
        Smallest delta(v) observed over all sampled kernel vectors v.
    witness : Signal
        A kernel vector attaining min_delta_found.
    threshold : float
        1 + 1/mu; kernel vectors can never have delta below it.
    trials : int
        Number of random samples drawn (refinement steps not counted).
    """

    min_delta_found: float
    witness: Signal
    threshold: float
    trials: int

    def to_json_dict(self) -> dict:
        return {
            "min_delta_found": self.min_delta_found,
            "witness": [
                {"re": float(v.real), "im": float(v.imag)} for v in self.witness.entries
            ],
            "threshold": self.threshold,
            "trials": self.trials,
        }


@dataclass(frozen=True)
class ExhaustiveRecovery:
    """Best solution over every support of size at most k."""

    support: SupportSet
    coefficients: np.ndarray
    residual_norm: float

    def to_json_dict(self) -> dict:
        return {
            "support": list(self.support.indices),
            "coefficients": [
                {"re": float(c.real), "im": float(c.imag)} for c in self.coefficients
            ],
            "residual_norm": self.residual_norm,
        }


def nullspace_basis(a: Dictionary) -> np.ndarray:
    """Orthonormal columns spanning ker(A); shape (N, 0) when A has full column rank."""
    _, singular_values, vh = np.linalg.svd(a.matrix)
    cutoff = NULLSPACE_RANK_TOL * (singular_values[0] if singular_values.size else 0.0)
    rank = int(np.count_nonzero(singular_values > cutoff))
    return vh[rank:].conj().T


def _batch_deltas(vectors: np.ndarray) -> np.ndarray:
    """delta of each column; zero columns get +inf so they never win the minimum."""
    mags = np.abs(vectors)
    peaks = mags.max(axis=0)
    sums = mags.sum(axis=0)
    with np.errstate(divide="ignore", invalid="ignore"):
        deltas = np.where(peaks > 0.0, sums / peaks, np.inf)
    return deltas


def _refine_in_kernel(kernel: np.ndarray, coeffs: np.ndarray) -> tuple[float, np.ndarray]:
    """Coordinate-wise pattern search on delta(kernel @ c), staying in the kernel."""
    c = coeffs / np.linalg.norm(coeffs)
    best = float(_batch_deltas((kernel @ c)[:, None])[0])
    step = 0.5
    evals = 0
    while step > 1e-8 and evals < 20_000:
        improved = False
        for j in range(c.size):
            for direction in (1.0, -1.0, 1.0j, -1.0j):
                cand = c.copy()
                cand[j] += direction * step
                norm = np.linalg.norm(cand)
                if norm < 1e-10:
                    continue
                cand /= norm
                val = float(_batch_deltas((kernel @ cand)[:, None])[0])
                evals += 1
                if val < best - 1e-15:
                    best, c, improved = val, cand, True
        if not improved:
            step *= 0.5
    return best, c


def probe_kernel_density(a: Dictionary, trials: int, rng: Rng) -> KernelProbeResult:
    """Search the kernel of A for its lowest-density direction.

    Draws random complex combinations of a nullspace basis in batches, then
    refines the best candidate by local descent.  Raises TrivialKernelError
    when A has full column rank (which includes every orthonormal dictionary).
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    kernel = nullspace_basis(a)
    if kernel.shape[1] == 0:
        raise TrivialKernelError("dictionary has full column rank; kernel is {0}")
    mu = coherence(a).mu
    threshold = float("inf") if mu == 0.0 else 1.0 + 1.0 / mu

    dim = kernel.shape[1]
    best_delta = np.inf
    best_coeffs = None
    drawn = 0
    while drawn < trials:
        batch = min(_PROBE_BATCH, trials - drawn)
        coeffs = (rng.standard_normal((dim, batch)) + 1j * rng.standard_normal((dim, batch)))
        deltas = _batch_deltas(kernel @ coeffs)
        pick = int(np.argmin(deltas))
        if deltas[pick] < best_delta:
            best_delta = float(deltas[pick])
            best_coeffs = coeffs[:, pick].copy()
        drawn += batch

    best_delta, best_coeffs = _refine_in_kernel(kernel, best_coeffs)
    return KernelProbeResult(
        min_delta_found=best_delta,
        witness=Signal(kernel @ best_coeffs),
        threshold=threshold,
        trials=trials,
    )


def exhaustive_sparse_recovery(a: Dictionary, y: SignalLike, k: int) -> ExhaustiveRecovery:
    """Minimal-residual least squares over every support of size <= k.

    Ties within 1e-12 * ||y||_2 resolve to the sparsest, then lexicographically
    smallest, support.  Refuses instances with more than 10^7 candidate
    supports.
    """
    meas = as_signal(y)
    check_measurement_matches(a, meas)
    if not 0 <= k <= a.rows:
        raise KOutOfRangeError(f"k={k} outside [0, {a.rows}]")
    total = sum(math.comb(a.cols, j) for j in range(k + 1))
    if total > MAX_SUPPORT_EVALS:
        raise TooLargeError(
            f"{total} candidate supports exceed the {MAX_SUPPORT_EVALS} evaluation cap"
        )

    y_vec = meas.entries
    tie_tol = 1e-12 * float(np.linalg.norm(y_vec))
    best_support: tuple[int, ...] = ()
    best_coeffs = np.zeros(0, dtype=np.complex128)
    best_residual = float(np.linalg.norm(y_vec))
    for size in range(1, k + 1):
        for support in itertools.combinations(range(a.cols), size):
            sub = a.matrix[:, list(support)]
            coeffs, _, _, _ = np.linalg.lstsq(sub, y_vec, rcond=None)
            residual = float(np.linalg.norm(y_vec - sub @ coeffs))
            if residual < best_residual - tie_tol:
                best_support, best_coeffs, best_residual = support, coeffs, residual
    return ExhaustiveRecovery(
        support=SupportSet(best_support),
        coefficients=best_coeffs,
        residual_norm=best_residual,
    )
