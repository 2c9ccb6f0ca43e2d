import numpy as np
import pytest

from lowdensity import (
    Dictionary,
    Signal,
    SupportSet,
    as_signal,
    as_support,
    complex_gaussian,
    concat_dictionaries,
    derive_rng,
    hadamard_dictionary,
    identity_dictionary,
    make_dictionary,
    make_rng,
    random_unit_dictionary,
)
from lowdensity.core import check_measurement_matches, check_signal_matches
from lowdensity.errors import (
    DimensionMismatchError,
    NonFiniteError,
    NotNormalizedError,
    NotPowerOfTwoError,
    RowMismatchError,
    ZeroColumnError,
)


def test_signal_stores_complex128_readonly():
    s = Signal([1, 2, 3])
    assert s.entries.dtype == np.complex128
    assert s.dim == 3
    assert len(s) == 3
    with pytest.raises(ValueError):
        s.entries[0] = 5.0


def test_signal_rejects_nonfinite_and_empty():
    with pytest.raises(NonFiniteError):
        Signal([1.0, np.nan])
    with pytest.raises(NonFiniteError):
        Signal([np.inf, 0.0])
    with pytest.raises(NonFiniteError):
        Signal([])
    with pytest.raises(NonFiniteError):
        Signal(np.zeros((2, 2)))


def test_signal_is_zero():
    assert Signal([0, 0]).is_zero()
    assert not Signal([0, 1e-300]).is_zero()


def test_as_signal_passthrough_and_coercion():
    s = Signal([1.0])
    assert as_signal(s) is s
    assert as_signal([1, 2]).dim == 2


def test_dictionary_requires_unit_columns():
    with pytest.raises(NotNormalizedError):
        Dictionary(np.array([[2.0, 0.0], [0.0, 1.0]]))
    d = make_dictionary(np.array([[2.0, 0.0], [0.0, 3.0]]), normalize=True)
    assert np.allclose(np.linalg.norm(d.matrix, axis=0), 1.0)


def test_make_dictionary_zero_column():
    with pytest.raises(ZeroColumnError):
        make_dictionary(np.array([[1.0, 0.0], [0.0, 0.0]]), normalize=True)


def test_dictionary_matrix_readonly():
    d = identity_dictionary(2)
    with pytest.raises(ValueError):
        d.matrix[0, 0] = 7.0


def test_hadamard_is_orthonormal_basis():
    for m in (1, 2, 4, 8, 64):
        h = hadamard_dictionary(m)
        gram = h.matrix.conj().T @ h.matrix
        assert np.max(np.abs(gram - np.eye(m))) <= 1e-12
    # M = 64 is exact in floats: entries are +/- 2^-3
    h64 = hadamard_dictionary(64)
    assert np.max(np.abs(h64.matrix.conj().T @ h64.matrix - np.eye(64))) == 0.0


@pytest.mark.parametrize("m", [0, 3, 6, 12, -4])
def test_hadamard_rejects_non_powers_of_two(m):
    with pytest.raises(NotPowerOfTwoError):
        hadamard_dictionary(m)


def test_concat_shapes_and_row_mismatch():
    d = concat_dictionaries(identity_dictionary(4), hadamard_dictionary(4))
    assert (d.rows, d.cols) == (4, 8)
    assert np.array_equal(d.matrix[:, :4], np.eye(4))
    with pytest.raises(RowMismatchError):
        concat_dictionaries(identity_dictionary(4), identity_dictionary(8))


def test_subset_and_column():
    d = concat_dictionaries(identity_dictionary(3), hadamard_dictionary(1))
    assert np.array_equal(d.column(1), np.array([0, 1, 0], dtype=complex))
    sub = d.subset([2, 0])
    assert sub.shape == (3, 2)
    assert np.array_equal(sub[:, 0], d.column(2))


def test_support_set_validation():
    s = SupportSet((3, 1, 2))
    assert len(s) == 3
    assert 2 in s and 5 not in s
    assert s.as_set() == frozenset({1, 2, 3})
    assert list(s) == [3, 1, 2]
    with pytest.raises(IndexError):
        SupportSet((1, 1))
    with pytest.raises(IndexError):
        SupportSet((-1,))
    assert as_support([0, 2]).indices == (0, 2)


def test_rng_is_reproducible():
    a = make_rng(123).standard_normal(8)
    b = make_rng(123).standard_normal(8)
    assert np.array_equal(a, b)
    c = derive_rng(120, 3).standard_normal(8)
    assert np.array_equal(a, c)


def test_complex_gaussian_unit_variance():
    z = complex_gaussian(make_rng(0), 200_000)
    assert z.dtype == np.complex128
    assert abs(np.mean(np.abs(z) ** 2) - 1.0) < 0.01


def test_random_unit_dictionary_deterministic():
    d1 = random_unit_dictionary(8, 12, make_rng(7))
    d2 = random_unit_dictionary(8, 12, make_rng(7))
    assert np.array_equal(d1.matrix, d2.matrix)
    assert np.allclose(np.linalg.norm(d1.matrix, axis=0), 1.0)


def test_dimension_check_helpers():
    d = identity_dictionary(3)
    check_signal_matches(d, Signal([1, 0, 0]))
    check_measurement_matches(d, Signal([1, 0, 0]))
    with pytest.raises(DimensionMismatchError):
        check_signal_matches(d, Signal([1, 0]))
    with pytest.raises(DimensionMismatchError):
        check_measurement_matches(d, Signal([1, 0, 0, 0]))
