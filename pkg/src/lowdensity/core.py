"""Core vector/matrix types, dictionary constructors, and deterministic RNG.

All numeric data is stored as complex128; real inputs are embedded with zero
imaginary parts.  Indices are zero-based everywhere, including file formats
and CLI output.  Instances of :class:`Signal`, :class:`Dictionary`, and
:class:`SupportSet` are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import (
    DimensionMismatchError,
    NonFiniteError,
    NotNormalizedError,
    NotPowerOfTwoError,
    RowMismatchError,
    ZeroColumnError,
)

#: Absolute tolerance on dictionary column norms (|norm - 1| must not exceed it).
COLUMN_NORM_TOL = 1e-8

#: Columns with norm below this are treated as zero when normalizing.
ZERO_COLUMN_TOL = 1e-12


def _as_complex_matrix(matrix) -> np.ndarray:
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise NonFiniteError("expected a nonempty 2-D matrix")
    if not np.all(np.isfinite(m)):
        raise NonFiniteError("matrix entries must be finite")
    return m


@dataclass(frozen=True, eq=False)
class Signal:
    """A finite complex vector together with its ambient dimension.

    Parameters
    ----------
    entries : array_like
        One-dimensional sequence of (complex) amplitudes.  Stored as a
        read-only complex128 array.
    """

    entries: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.complex128)
        if e.ndim != 1 or e.size == 0:
            raise NonFiniteError("signal must be a nonempty 1-D vector")
        if not np.all(np.isfinite(e)):
            raise NonFiniteError("signal entries must be finite")
        e = e.copy()
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def dim(self) -> int:
        """Ambient dimension N (length of the entry vector)."""
        return self.entries.shape[0]

    def is_zero(self) -> bool:
        return bool(np.all(self.entries == 0))

    def __len__(self) -> int:
        return self.dim


SignalLike = Union[Signal, Sequence[complex], np.ndarray]


def as_signal(x: SignalLike) -> Signal:
    """Coerce an array-like or :class:`Signal` into a validated Signal."""
    if isinstance(x, Signal):
        return x
    return Signal(np.asarray(x))


@dataclass(frozen=True, eq=False)
class Dictionary:
    """An M-by-N complex matrix whose columns (atoms) have unit l2 norm.

    Construction validates the unit-norm invariant to within
    :data:`COLUMN_NORM_TOL`; use :func:`make_dictionary` with
    ``normalize=True`` to normalize arbitrary matrices first.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = _as_complex_matrix(self.matrix)
        norms = np.linalg.norm(m, axis=0)
        worst = np.abs(norms - 1.0).max()
        if worst > COLUMN_NORM_TOL:
            raise NotNormalizedError(
                f"column norms deviate from 1 by up to {worst:.3e} "
                f"(tolerance {COLUMN_NORM_TOL:.0e})"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    def column(self, i: int) -> np.ndarray:
        return self.matrix[:, i]

    def subset(self, indices: Iterable[int]) -> np.ndarray:
        """Columns with the given indices, as a dense M x |indices| array."""
        return self.matrix[:, list(indices)]


@dataclass(frozen=True)
class SupportSet:
    """An ordered set of distinct zero-based column indices."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 0 for i in idx):
            raise IndexError("support indices must be nonnegative")
        if len(set(idx)) != len(idx):
            raise IndexError("support indices must be distinct")
        object.__setattr__(self, "indices", idx)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    def as_set(self) -> frozenset[int]:
        return frozenset(self.indices)


SupportLike = Union[SupportSet, Sequence[int]]


def as_support(s: SupportLike) -> SupportSet:
    if isinstance(s, SupportSet):
        return s
    return SupportSet(tuple(s))


# ---------------------------------------------------------------------------
# Deterministic random generation
# ---------------------------------------------------------------------------

#: The RNG is numpy's PCG64 behind ``numpy.random.Generator``.  For a fixed
#: numpy version the bit stream for a given seed is identical on all
#: platforms.  Generators are single-owner: derive a fresh one per trial
#: instead of sharing.
Rng = np.random.Generator


def make_rng(seed: int) -> Rng:
    """Create a deterministic PCG64 generator from a 64-bit unsigned seed."""
    return np.random.Generator(np.random.PCG64(seed))


def derive_rng(base_seed: int, trial_index: int) -> Rng:
    """Per-trial generator seeded with ``base_seed + trial_index``."""
    return make_rng(base_seed + trial_index)


def complex_gaussian(rng: Rng, shape) -> np.ndarray:
    """I.i.d. standard complex Gaussian samples (unit total variance)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


# ---------------------------------------------------------------------------
# Dictionary constructors
# ---------------------------------------------------------------------------


def make_dictionary(matrix, normalize: bool = False) -> Dictionary:
    """Validate (and optionally column-normalize) a matrix into a Dictionary.

    Parameters
    ----------
    matrix : array_like
        Nonempty M x N matrix with finite entries.
    normalize : bool
        When true, each column is divided by its l2 norm; columns with norm
        below ``1e-12`` raise :class:`~lowdensity.errors.ZeroColumnError`.
        When false, columns must already be unit-norm to within ``1e-8``.
    """
    m = _as_complex_matrix(matrix)
    if normalize:
        norms = np.linalg.norm(m, axis=0)
        if np.any(norms < ZERO_COLUMN_TOL):
            bad = int(np.argmin(norms))
            raise ZeroColumnError(f"column {bad} has norm {norms[bad]:.3e}")
        m = m / norms
    return Dictionary(m)


def hadamard_dictionary(m: int) -> Dictionary:
    """Sylvester-construction Hadamard basis of size M = 2^k, scaled by 1/sqrt(M).

    The columns form an orthonormal basis with entries +/- 1/sqrt(M).
    """
    m = int(m)
    if m < 1 or (m & (m - 1)) != 0:
        raise NotPowerOfTwoError(f"M must be a power of two, got {m}")
    h = np.array([[1.0]])
    while h.shape[0] < m:
        h = np.block([[h, h], [h, -h]])
    return Dictionary(h.astype(np.complex128) / np.sqrt(m))


def identity_dictionary(m: int) -> Dictionary:
    """The standard basis of dimension M."""
    if int(m) < 1:
        raise NonFiniteError("dimension must be >= 1")
    return Dictionary(np.eye(int(m), dtype=np.complex128))


def concat_dictionaries(a: Dictionary, b: Dictionary) -> Dictionary:
    """Column-wise concatenation [A B]; A's atoms come first."""
    if a.rows != b.rows:
        raise RowMismatchError(f"row counts differ: {a.rows} vs {b.rows}")
    return Dictionary(np.hstack([a.matrix, b.matrix]))


def random_unit_dictionary(m: int, n: int, rng: Rng) -> Dictionary:
    """Dictionary with i.i.d. standard complex Gaussian entries, columns normalized.

    Deterministic for a fixed generator state; pass ``make_rng(seed)`` for
    reproducible output.
    """
    m, n = int(m), int(n)
    if m < 1 or n < 1:
        raise NonFiniteError("dimensions must be >= 1")
    raw = complex_gaussian(rng, (m, n))
    return make_dictionary(raw, normalize=True)


def check_signal_matches(a: Dictionary, x: Signal, what: str = "signal") -> None:
    """Raise DimensionMismatchError unless ``x.dim == a.cols``."""
    if x.dim != a.cols:
        raise DimensionMismatchError(
            f"{what} has dimension {x.dim}, dictionary has {a.cols} columns"
        )


def check_measurement_matches(a: Dictionary, y: Signal) -> None:
    """Raise DimensionMismatchError unless ``y.dim == a.rows``."""
    if y.dim != a.rows:
        raise DimensionMismatchError(
            f"measurement has dimension {y.dim}, dictionary has {a.rows} rows"
        )
