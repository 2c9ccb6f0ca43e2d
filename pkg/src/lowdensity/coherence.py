"""Dictionary coherence measures and the inequalities built on them.

Coherence mu = max_{i != j} |a_i^H a_j| controls how far the Gram matrix
A^H A is from the identity.  Three consequences implemented here:

* the l_inf sandwich  1 - mu(delta(x)-1) <= ||A^H A x||_inf / ||x||_inf
  <= 1 + mu(delta(x)-1),
* the cross bound  ||A^H B z||_inf <= mu_m ||z||_1  for the mutual
  coherence mu_m = max_{i,j} |a_i^H b_j|,
* the Gersgorin eigenvalue floor  lambda_min(A_S^H A_S) >= [1 - mu(|S|-1)]^+.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Dictionary,
    SignalLike,
    SupportLike,
    as_signal,
    as_support,
    check_signal_matches,
)
from .density import delta_density
from .errors import EmptySupportError, RowMismatchError, ZeroSignalError


@dataclass(frozen=True)
class CoherenceReport:
    """Coherence of one dictionary.

    Attributes
    ----------
    mu : float
        max over i != j of |a_i^H a_j|, in [0, 1] for unit-norm columns.
    argmax_pair : tuple of int or None
        Column pair attaining the maximum; None for single-column
        dictionaries, where mu = 0 by convention.
    """

    mu: float
    argmax_pair: tuple[int, int] | None


@dataclass(frozen=True)
class MutualCoherenceReport:
    """Mutual coherence of a dictionary pair: max over all (i, j) of |a_i^H b_j|."""

    mu_m: float
    argmax_pair: tuple[int, int]


@dataclass(frozen=True)
class LinfBounds:
    """Two-sided bound on ||A^H A x||_inf / ||x||_inf in terms of delta(x)."""

    lower: float
    upper: float
    ratio: float


@dataclass(frozen=True)
class CrossCoherenceBound:
    """lhs = ||A^H B z||_inf against rhs = mu_m ||z||_1."""

    lhs: float
    rhs: float


@dataclass(frozen=True)
class GramConditioningBound:
    """Gersgorin floor [1 - mu(|S|-1)]^+ against the actual lambda_min of A_S^H A_S."""

    bound: float
    lambda_min: float


def coherence(a: Dictionary) -> CoherenceReport:
    """Largest off-diagonal Gram magnitude, with the attaining column pair."""
    if a.cols < 2:
        return CoherenceReport(mu=0.0, argmax_pair=None)
    gram_mags = np.abs(a.matrix.conj().T @ a.matrix)
    np.fill_diagonal(gram_mags, -1.0)
    i, j = np.unravel_index(int(np.argmax(gram_mags)), gram_mags.shape)
    return CoherenceReport(mu=float(gram_mags[i, j]), argmax_pair=(int(i), int(j)))


def mutual_coherence(a: Dictionary, b: Dictionary) -> MutualCoherenceReport:
    """Largest cross inner-product magnitude, maximizing over all (i, j) pairs."""
    if a.rows != b.rows:
        raise RowMismatchError(f"row counts differ: {a.rows} vs {b.rows}")
    cross_mags = np.abs(a.matrix.conj().T @ b.matrix)
    i, j = np.unravel_index(int(np.argmax(cross_mags)), cross_mags.shape)
    return MutualCoherenceReport(mu_m=float(cross_mags[i, j]), argmax_pair=(int(i), int(j)))


def linf_density_bounds(a: Dictionary, x: SignalLike) -> LinfBounds:
    """Sandwich ||A^H A x||_inf / ||x||_inf between 1 -/+ mu(delta(x) - 1)."""
    sig = as_signal(x)
    check_signal_matches(a, sig, "x")
    if sig.is_zero():
        raise ZeroSignalError("l_inf bounds are undefined for the zero signal")
    mu = coherence(a).mu
    spread = mu * (delta_density(sig) - 1.0)
    ratio = float(
        np.abs(a.matrix.conj().T @ (a.matrix @ sig.entries)).max()
        / np.abs(sig.entries).max()
    )
    return LinfBounds(lower=1.0 - spread, upper=1.0 + spread, ratio=ratio)


def cross_coherence_bound(a: Dictionary, b: Dictionary, z: SignalLike) -> CrossCoherenceBound:
    """Evaluate ||A^H B z||_inf against its bound mu_m ||z||_1."""
    sig = as_signal(z)
    if a.rows != b.rows:
        raise RowMismatchError(f"row counts differ: {a.rows} vs {b.rows}")
    check_signal_matches(b, sig, "z")
    lhs = float(np.abs(a.matrix.conj().T @ (b.matrix @ sig.entries)).max())
    rhs = mutual_coherence(a, b).mu_m * float(np.abs(sig.entries).sum())
    return CrossCoherenceBound(lhs=lhs, rhs=rhs)


def gram_conditioning_bound(a: Dictionary, support: SupportLike) -> GramConditioningBound:
    """Gersgorin lower bound on the smallest eigenvalue of the support Gram matrix."""
    s = as_support(support)
    if len(s) == 0:
        raise EmptySupportError("conditioning bound needs at least one column")
    sub = a.subset(s.indices)
    gram = sub.conj().T @ sub
    lambda_min = float(np.linalg.eigvalsh(gram)[0])
    bound = max(0.0, 1.0 - coherence(a).mu * (len(s) - 1))
    return GramConditioningBound(bound=bound, lambda_min=lambda_min)
