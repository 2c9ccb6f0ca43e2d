"""Exception types raised by the library.

Every error is a subclass of :class:`LowDensityError`, which itself derives
from ``ValueError`` so callers may catch broadly without importing this
module.
"""


class LowDensityError(ValueError):
    """Base class for all library errors."""


class NonFiniteError(LowDensityError):
    """Input contains NaN or infinite entries."""


class ZeroColumnError(LowDensityError):
    """A column requested for normalization has (near-)zero norm."""


class NotNormalizedError(LowDensityError):
    """A dictionary column deviates from unit l2 norm beyond tolerance."""


class NotPowerOfTwoError(LowDensityError):
    """Hadamard dimension is not a power of two."""


class RowMismatchError(LowDensityError):
    """Two dictionaries do not share the same number of rows."""


class DimensionMismatchError(LowDensityError):
    """A signal's dimension does not match the operand it is paired with."""


class ZeroSignalError(LowDensityError):
    """Operation requires a nonzero signal."""


class AlphaOutOfRangeError(LowDensityError):
    """Decay factor outside the open interval (0, 1 - 1/N)."""


class KOutOfRangeError(LowDensityError):
    """Requested sparsity level outside the valid range."""


class EmptySupportError(LowDensityError):
    """Operation requires at least one support index."""


class EmptyRemainingError(LowDensityError):
    """Greedy selection was asked to choose from an empty index set."""


class TMaxOutOfRangeError(LowDensityError):
    """Iteration budget outside the valid range."""


class RankDeficientError(LowDensityError):
    """Selected columns are numerically rank deficient."""


class TrivialKernelError(LowDensityError):
    """The dictionary has a trivial (zero-dimensional) kernel."""


class TooLargeError(LowDensityError):
    """Combinatorial work guard tripped."""


class NonPositiveMuError(LowDensityError):
    """Coherence argument must be strictly positive."""


class FileFormatError(LowDensityError):
    """A matrix/signal file does not follow the expected CSV format."""
