"""Coherence-based certificates for kernel exclusion, uncertainty, and greedy recovery.

Three verdicts, all driven by the delta-density and dictionary coherence:

* kernel_certificate: delta(x) < 1 + 1/mu guarantees A x != 0.
* uncertainty_check: if A x = B z then
  [1 - mu_a(delta(x)-1)]^+ [1 - mu_b(delta(z)-1)]^+ <= delta(x) delta(z) mu_m^2.
* omp_guarantee: t_max < 1 + 1/mu together with
  delta(x_tail(t)) < (1/2)(1 + 1/mu - (t-1)) for t = 1..t_max guarantees
  orthogonal matching pursuit picks the t_max largest-modulus entries in order.

Certificates never over-claim: every inequality is evaluated strictly in
floating point with no tolerance slack, so borderline inputs fail.  For
orthonormal dictionaries (mu = 0) the hypotheses are vacuous; those verdicts
short-circuit with trivial_coherence = True and an infinite threshold instead
of dividing by zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Dictionary, SignalLike, as_signal, check_signal_matches
from .density import delta_density, sparsity
from .errors import (
    AlphaOutOfRangeError,
    NonPositiveMuError,
    TMaxOutOfRangeError,
    ZeroSignalError,
)
from .coherence import coherence, mutual_coherence


@dataclass(frozen=True)
class KernelCertificate:
    """Verdict on whether x is provably outside the kernel of the dictionary.

    Attributes
    ----------
    delta : float
        delta-density of x.
    threshold : float
        1 + 1/mu; infinite when mu = 0.
    certified_nonzero : bool
        True iff delta < threshold (strict).
    classical_certified : bool
        True iff the sparsity-based test ||x||_0 < threshold passes; implies
        certified_nonzero since delta <= ||x||_0.
    trivial_coherence : bool
        True when mu = 0: any nonzero signal is outside the kernel of an
        orthonormal dictionary, no density condition needed.
    """

    delta: float
    threshold: float
    certified_nonzero: bool
    classical_certified: bool
    trivial_coherence: bool = False

    def to_json_dict(self) -> dict:
        return {
            "delta": self.delta,
            "threshold": self.threshold,
            "certified_nonzero": self.certified_nonzero,
            "classical_certified": self.classical_certified,
            "trivial_coherence": self.trivial_coherence,
        }


@dataclass(frozen=True)
class UncertaintyReport:
    """Evaluation of the density uncertainty inequality for a pair (x, z) with Ax = Bz.

    The inequality lhs <= rhs is only meaningful when constraint_residual
    (= ||Ax - Bz||_2) is negligible; the report states the numbers and leaves
    that judgement to the caller.
    """

    lhs: float
    rhs: float
    residual_gap: float
    constraint_residual: float

    def to_json_dict(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual_gap": self.residual_gap,
            "constraint_residual": self.constraint_residual,
        }


@dataclass(frozen=True)
class IterationCheck:
    """One step of the greedy-selection certificate.

    tail_delta is the delta-density of x with its t-1 largest-modulus entries
    removed; ok requires tail_delta < threshold_t strictly.
    """

    t: int
    tail_delta: float
    threshold_t: float
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "tail_delta": self.tail_delta,
            "threshold_t": self.threshold_t,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class GuaranteeReport:
    """Verdict on whether t_max greedy iterations provably select the right atoms.

    certified is True iff t_max < 1 + 1/mu and every per-iteration check
    passes.  The per-iteration tail densities assume entries are removed in
    descending-modulus order; when certified this matches the actual solver
    trajectory, otherwise the sequence is a heuristic diagnostic.
    """

    t_max: int
    mu: float
    C: float
    per_iteration: tuple[IterationCheck, ...]
    iteration_bound_ok: bool
    certified: bool
    classical_threshold: float
    trivial_coherence: bool = False

    def to_json_dict(self) -> dict:
        return {
            "t_max": self.t_max,
            "mu": self.mu,
            "C": self.C,
            "per_iteration": [step.to_json_dict() for step in self.per_iteration],
            "iteration_bound_ok": self.iteration_bound_ok,
            "certified": self.certified,
            "classical_threshold": self.classical_threshold,
            "trivial_coherence": self.trivial_coherence,
        }


def kernel_certificate(a: Dictionary, x: SignalLike) -> KernelCertificate:
    """Certify A x != 0 from delta(x) < 1 + 1/mu alone."""
    sig = as_signal(x)
    check_signal_matches(a, sig, "x")
    if sig.is_zero():
        raise ZeroSignalError("the zero signal is in every kernel")
    delta = delta_density(sig)
    mu = coherence(a).mu
    if mu == 0.0:
        return KernelCertificate(
            delta=delta,
            threshold=float("inf"),
            certified_nonzero=True,
            classical_certified=True,
            trivial_coherence=True,
        )
    threshold = 1.0 + 1.0 / mu
    return KernelCertificate(
        delta=delta,
        threshold=threshold,
        certified_nonzero=delta < threshold,
        classical_certified=sparsity(sig) < threshold,
    )


def uncertainty_check(
    a: Dictionary, b: Dictionary, x: SignalLike, z: SignalLike
) -> UncertaintyReport:
    """Evaluate both sides of the density uncertainty inequality for Ax = Bz."""
    sx = as_signal(x)
    sz = as_signal(z)
    check_signal_matches(a, sx, "x")
    check_signal_matches(b, sz, "z")
    if sx.is_zero() or sz.is_zero():
        raise ZeroSignalError("uncertainty relation requires nonzero x and z")
    mu_a = coherence(a).mu
    mu_b = coherence(b).mu
    mu_m = mutual_coherence(a, b).mu_m
    dx = delta_density(sx)
    dz = delta_density(sz)
    lhs = max(0.0, 1.0 - mu_a * (dx - 1.0)) * max(0.0, 1.0 - mu_b * (dz - 1.0))
    rhs = dx * dz * mu_m * mu_m
    residual = float(np.linalg.norm(a.matrix @ sx.entries - b.matrix @ sz.entries))
    return UncertaintyReport(
        lhs=lhs, rhs=rhs, residual_gap=rhs - lhs, constraint_residual=residual
    )


def onb_uncertainty_bound(mu_m: float) -> float:
    """Lower bound 1/mu_m**2 on delta(x)*delta(z) over representations in two bases."""
    if mu_m <= 0.0:
        raise NonPositiveMuError(f"mutual coherence must be positive, got {mu_m}")
    return 1.0 / (mu_m * mu_m)


def classical_omp_threshold(mu: float) -> float:
    """Sparsity threshold (1/2)(1 + 1/mu) of the classical recovery condition."""
    if mu <= 0.0:
        raise NonPositiveMuError(f"coherence must be positive, got {mu}")
    return 0.5 * (1.0 + 1.0 / mu)


def alpha_decay_iteration_bound(alpha: float, mu: float) -> float:
    """Iterations certifiable for a decaying signal: 2 + 1/mu - 2/(1-alpha).

    May be negative, meaning no iteration is certifiable at this (alpha, mu).
    """
    if not (0.0 < alpha < 1.0):
        raise AlphaOutOfRangeError(f"alpha={alpha} outside (0, 1)")
    if mu <= 0.0:
        raise NonPositiveMuError(f"coherence must be positive, got {mu}")
    return 2.0 + 1.0 / mu - 2.0 / (1.0 - alpha)


def omp_guarantee(a: Dictionary, x: SignalLike, t_max: int) -> GuaranteeReport:
    """Static certificate that t_max greedy iterations select the largest entries.

    Checks t_max < 1 + 1/mu and, for each t, that the density of x with its
    t-1 largest-modulus entries removed stays below C - (t-1)/2 where
    C = (1/2)(1 + 1/mu).
    """
    sig = as_signal(x)
    check_signal_matches(a, sig, "x")
    if not 1 <= t_max <= a.cols:
        raise TMaxOutOfRangeError(f"t_max={t_max} outside [1, {a.cols}]")
    mu = coherence(a).mu

    # descending-modulus removal order, stable so ties keep the lowest index
    mags = np.abs(sig.entries)
    order = np.argsort(-mags, kind="stable")
    sorted_mags = mags[order]

    def tail_delta(t: int) -> float:
        tail = sorted_mags[t - 1 :]
        if tail.size == 0 or tail[0] == 0.0:
            return 0.0
        return float(tail.sum() / tail[0])

    if mu == 0.0:
        inf = float("inf")
        steps = tuple(
            IterationCheck(t=t, tail_delta=tail_delta(t), threshold_t=inf, ok=True)
            for t in range(1, t_max + 1)
        )
        return GuaranteeReport(
            t_max=t_max,
            mu=0.0,
            C=inf,
            per_iteration=steps,
            iteration_bound_ok=True,
            certified=True,
            classical_threshold=inf,
            trivial_coherence=True,
        )

    big_c = 0.5 * (1.0 + 1.0 / mu)
    steps = []
    for t in range(1, t_max + 1):
        threshold_t = big_c - 0.5 * (t - 1)
        td = tail_delta(t)
        steps.append(
            IterationCheck(t=t, tail_delta=td, threshold_t=threshold_t, ok=td < threshold_t)
        )
    iteration_bound_ok = t_max < 1.0 + 1.0 / mu
    return GuaranteeReport(
        t_max=t_max,
        mu=mu,
        C=big_c,
        per_iteration=tuple(steps),
        iteration_bound_ok=iteration_bound_ok,
        certified=iteration_bound_ok and all(s.ok for s in steps),
        classical_threshold=big_c,
    )
