"""Orthogonal matching pursuit with a full iteration trace.

Each iteration selects the atom most correlated with the current residual,
then refits all selected coefficients by least squares, so the residual stays
orthogonal to the span of the selected atoms.  The solver is fixed-iteration;
it stops early only when the residual is numerically zero against every
remaining atom (correlation <= 1e-14) or an optional residual_tol is reached.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    Dictionary,
    Signal,
    SignalLike,
    SupportLike,
    SupportSet,
    as_signal,
    as_support,
    check_measurement_matches,
)
from .errors import EmptyRemainingError, RankDeficientError, TMaxOutOfRangeError

CORRELATION_FLOOR = 1e-14
RANK_TOL = 1e-10


@dataclass(frozen=True)
class LeastSquaresFit:
    """Coefficients minimizing ||y - A_S c||_2 and the orthogonal residual y - A_S c."""

    coefficients: np.ndarray
    residual: np.ndarray


@dataclass(frozen=True)
class OmpTrace:
    """Complete record of one solver run.

    Attributes
    ----------
    support : SupportSet
        Selected column indices, in selection order.
    coefficients : numpy.ndarray
        Final least-squares coefficients, aligned with ``support``.
    residual_norms : tuple of float
        ||r||_2 after t = 0, 1, ... iterations; starts at ||y||_2.
    selected : tuple of int
        Index chosen at each completed iteration (equals ``support.indices``).
    correlations : tuple of float
        Winning |a_i^H r| at each completed iteration.
    dim : int
        Number of dictionary columns, for re-embedding the estimate.
    """

    support: SupportSet
    coefficients: np.ndarray
    residual_norms: tuple[float, ...]
    selected: tuple[int, ...]
    correlations: tuple[float, ...]
    dim: int

    def estimate(self) -> Signal:
        """Full-length estimate with the coefficients placed on the support."""
        out = np.zeros(self.dim, dtype=np.complex128)
        out[list(self.support.indices)] = self.coefficients
        return Signal(out)

    def to_json_dict(self) -> dict:
        return {
            "support": list(self.support.indices),
            "coefficients": [
                {"re": float(c.real), "im": float(c.imag)} for c in self.coefficients
            ],
            "residual_norms": list(self.residual_norms),
            "selected": list(self.selected),
            "correlations": list(self.correlations),
        }


def omp_select(a: Dictionary, r: SignalLike, remaining: SupportLike) -> int:
    """Index in remaining maximizing |a_i^H r|; ties go to the lowest index."""
    res = as_signal(r)
    check_measurement_matches(a, res)
    rem = sorted(as_support(remaining).indices)
    if not rem:
        raise EmptyRemainingError("no remaining atoms to select from")
    correlations = np.abs(a.subset(rem).conj().T @ res.entries)
    return rem[int(np.argmax(correlations))]


def least_squares_on_support(a: Dictionary, support: SupportLike, y: SignalLike) -> LeastSquaresFit:
    """Project y onto the span of the support columns via an orthogonal factorization."""
    s = as_support(support)
    meas = as_signal(y)
    check_measurement_matches(a, meas)
    if len(s) == 0:
        return LeastSquaresFit(
            coefficients=np.zeros(0, dtype=np.complex128), residual=meas.entries.copy()
        )
    sub = a.subset(s.indices)
    coeffs, _, _, singular_values = np.linalg.lstsq(sub, meas.entries, rcond=None)
    if singular_values[-1] < RANK_TOL:
        raise RankDeficientError(
            f"support columns are rank deficient (smallest singular value "
            f"{singular_values[-1]:.3e})"
        )
    return LeastSquaresFit(coefficients=coeffs, residual=meas.entries - sub @ coeffs)


def omp_run(
    a: Dictionary,
    y: SignalLike,
    t_max: int,
    residual_tol: float | None = None,
) -> OmpTrace:
    """Run t_max iterations of select / refit / residual update."""
    meas = as_signal(y)
    check_measurement_matches(a, meas)
    if not 1 <= t_max <= min(a.rows, a.cols):
        raise TMaxOutOfRangeError(f"t_max={t_max} outside [1, {min(a.rows, a.cols)}]")
    if residual_tol is not None and residual_tol < 0.0:
        raise ValueError(f"residual_tol must be nonnegative, got {residual_tol}")

    selected: list[int] = []
    correlations: list[float] = []
    residual_norms = [float(np.linalg.norm(meas.entries))]
    residual = meas.entries
    coefficients = np.zeros(0, dtype=np.complex128)

    for _ in range(t_max):
        remaining = [i for i in range(a.cols) if i not in set(selected)]
        corr = np.abs(a.subset(remaining).conj().T @ residual)
        pick = int(np.argmax(corr))
        winning = float(corr[pick])
        if winning <= CORRELATION_FLOOR:
            break
        selected.append(remaining[pick])
        correlations.append(winning)
        fit = least_squares_on_support(a, selected, meas)
        coefficients = fit.coefficients
        residual = fit.residual
        residual_norms.append(float(np.linalg.norm(residual)))
        if residual_tol is not None and residual_norms[-1] <= residual_tol:
            break

    return OmpTrace(
        support=SupportSet(tuple(selected)),
        coefficients=coefficients,
        residual_norms=tuple(residual_norms),
        selected=tuple(selected),
        correlations=tuple(correlations),
        dim=a.cols,
    )
