import numpy as np
import pytest

from lowdensity import (
    Signal,
    coherence,
    complex_gaussian,
    concat_dictionaries,
    cross_coherence_bound,
    gram_conditioning_bound,
    hadamard_dictionary,
    identity_dictionary,
    linf_density_bounds,
    make_alpha_decaying,
    make_dictionary,
    make_rng,
    mutual_coherence,
    random_unit_dictionary,
)
from lowdensity.errors import (
    EmptySupportError,
    RowMismatchError,
    ZeroSignalError,
)


def tight_dictionary():
    """Two basis atoms plus their normalized sum: mu = 1/sqrt(2)."""
    c = 1.0 / np.sqrt(2.0)
    return make_dictionary(np.array([[1.0, 0.0, c], [0.0, 1.0, c]]))


def random_onb(m, rng):
    q, r = np.linalg.qr(complex_gaussian(rng, (m, m)))
    return make_dictionary(q * (np.diagonal(r) / np.abs(np.diagonal(r))))


def test_coherence_examples():
    assert coherence(identity_dictionary(5)).mu == 0.0
    assert abs(coherence(tight_dictionary()).mu - 1 / np.sqrt(2)) <= 1e-15
    ih = concat_dictionaries(identity_dictionary(4), hadamard_dictionary(4))
    report = coherence(ih)
    assert report.mu == 0.5
    i, j = report.argmax_pair
    assert abs(np.vdot(ih.column(i), ih.column(j))) == 0.5


def test_coherence_single_column_convention():
    report = coherence(make_dictionary(np.array([[1.0]])))
    assert report.mu == 0.0
    assert report.argmax_pair is None


def test_coherence_permutation_invariant():
    rng = make_rng(3)
    d = random_unit_dictionary(6, 10, rng)
    mu = coherence(d).mu
    perm = rng.permutation(10)
    assert abs(coherence(make_dictionary(d.matrix[:, perm])).mu - mu) <= 1e-15
    assert 0.0 <= mu <= 1.0 + 1e-9


def test_mutual_coherence_examples():
    i4, h4 = identity_dictionary(4), hadamard_dictionary(4)
    assert mutual_coherence(i4, h4).mu_m == 0.5
    onb = random_onb(4, make_rng(1))
    assert abs(mutual_coherence(onb, onb).mu_m - 1.0) <= 1e-12
    swapped = make_dictionary(np.eye(2)[:, ::-1])
    assert mutual_coherence(identity_dictionary(2), swapped).mu_m == 1.0
    with pytest.raises(RowMismatchError):
        mutual_coherence(i4, identity_dictionary(2))


def test_onb_pair_lower_bound():
    for m in (2, 4, 8, 16):
        rng = make_rng(100 + m)
        for _ in range(20):
            mu_m = mutual_coherence(random_onb(m, rng), random_onb(m, rng)).mu_m
            assert mu_m >= 1 / np.sqrt(m) - 1e-9
    # identity/Hadamard attains the bound with equality
    assert mutual_coherence(identity_dictionary(8), hadamard_dictionary(8)).mu_m == pytest.approx(
        1 / np.sqrt(8), abs=1e-15
    )


def test_linf_bounds_onb_and_sparse():
    onb = random_onb(5, make_rng(9))
    b = linf_density_bounds(onb, [1, 2, 3, 0, 1j])
    assert b.lower == b.upper == 1.0
    assert abs(b.ratio - 1.0) <= 1e-12

    d = tight_dictionary()
    one_sparse = linf_density_bounds(d, [0, 1, 0])
    assert one_sparse.lower == one_sparse.upper == 1.0
    assert abs(one_sparse.ratio - 1.0) <= 1e-12


def test_linf_bounds_concat_decaying():
    a = concat_dictionaries(identity_dictionary(4), hadamard_dictionary(4))
    x = make_alpha_decaying(8, 0.5)
    b = linf_density_bounds(a, x)
    delta = (1 - 0.5**8) / 0.5
    assert abs(b.lower - (1 - 0.5 * (delta - 1))) <= 1e-12
    assert abs(b.upper - (1 + 0.5 * (delta - 1))) <= 1e-12
    assert b.lower - 1e-9 <= b.ratio <= b.upper + 1e-9


def test_linf_bounds_sandwich_random():
    rng = make_rng(42)
    for _ in range(200):
        a = random_unit_dictionary(8, 16, rng)
        x = complex_gaussian(rng, 16)
        b = linf_density_bounds(a, x)
        assert b.lower - 1e-9 <= b.ratio <= b.upper + 1e-9


def test_linf_bounds_errors():
    d = tight_dictionary()
    with pytest.raises(ZeroSignalError):
        linf_density_bounds(d, [0, 0, 0])
    with pytest.raises(ValueError):
        linf_density_bounds(d, [1, 0])


def test_cross_coherence_bound_cases():
    i4, h4 = identity_dictionary(4), hadamard_dictionary(4)
    single = cross_coherence_bound(i4, h4, [0, 1, 0, 0])
    assert single.lhs <= single.rhs + 1e-9
    assert single.rhs == 0.5
    zero = cross_coherence_bound(i4, h4, [0, 0, 0, 0])
    assert zero.lhs == zero.rhs == 0.0
    rng = make_rng(8)
    for _ in range(1000):
        a = random_unit_dictionary(8, 10, rng)
        b = random_unit_dictionary(8, 6, rng)
        z = complex_gaussian(rng, 6)
        rec = cross_coherence_bound(a, b, z)
        assert rec.lhs <= rec.rhs + 1e-9


def test_gram_conditioning_bound():
    d = concat_dictionaries(identity_dictionary(4), hadamard_dictionary(4))
    one = gram_conditioning_bound(d, [3])
    assert one.bound == 1.0
    assert abs(one.lambda_min - 1.0) <= 1e-12

    pair = gram_conditioning_bound(d, [0, 4])
    assert pair.bound == 0.5
    assert abs(pair.lambda_min - 0.5) <= 1e-12

    clamped = gram_conditioning_bound(d, [0, 1, 2, 4])
    assert clamped.bound == 0.0
    assert clamped.lambda_min >= -1e-9

    with pytest.raises(EmptySupportError):
        gram_conditioning_bound(d, [])


def test_gram_bound_random_supports():
    rng = make_rng(77)
    for _ in range(100):
        d = random_unit_dictionary(8, 12, rng)
        mu = coherence(d).mu
        max_size = int(np.ceil(1 + 1 / mu)) - 1
        size = int(rng.integers(1, max(2, max_size + 1)))
        support = rng.choice(12, size=size, replace=False).tolist()
        rec = gram_conditioning_bound(d, support)
        assert rec.lambda_min >= rec.bound - 1e-9


def test_signal_type_accepted():
    d = tight_dictionary()
    b = linf_density_bounds(d, Signal([1, 1, 0]))
    assert b.ratio >= b.lower - 1e-9
