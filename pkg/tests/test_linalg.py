import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from oracles.linalg_oracles import kron_loops, partial_trace_sum
from qvote import linalg
from qvote.ballots import pair_projector
from qvote.errors import DimensionError, NotHermitianError, NotPSDError, TraceError


def rand_rho(dim, seed):
    return linalg.random_density(dim, np.random.default_rng(seed))


def test_tensor_identity():
    assert np.array_equal(linalg.tensor(np.eye(2), np.eye(2)), np.eye(4))


def test_tensor_basis_projectors():
    out = linalg.tensor(np.diag([1, 0]), np.diag([0, 1]))
    assert np.array_equal(out, np.diag([0, 1, 0, 0]))


def test_tensor_block_structure_matches_loop_oracle():
    rho = rand_rho(2, 3)
    ket0 = np.diag([1, 0])
    out = linalg.tensor(ket0, rho)
    assert np.array_equal(out, kron_loops(ket0.astype(complex), rho))
    assert np.array_equal(out[:2, :2], rho)
    assert not out[2:, :].any() and not out[:, 2:].any()


int_mats = arrays(np.int64, st.tuples(st.integers(1, 3), st.integers(1, 3)),
                  elements=st.integers(-5, 5))


@given(int_mats, int_mats, int_mats)
def test_tensor_associative_and_exact(a, b, c):
    left = linalg.tensor(linalg.tensor(a, b), c)
    right = linalg.tensor(a, linalg.tensor(b, c))
    assert np.array_equal(left, right)
    assert np.array_equal(linalg.tensor(a, b), kron_loops(a, b))


def test_trace_values():
    assert linalg.trace(np.eye(6)) == 6
    assert linalg.trace(pair_projector(0, 1, 3).matrix) == 3
    assert abs(linalg.trace(rand_rho(5, 1)) - 1) < 1e-12


def test_trace_rejects_non_square():
    with pytest.raises(DimensionError):
        linalg.trace(np.zeros((2, 3)))


@settings(max_examples=30)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_trace_multiplicative(da, db, seed):
    a, b = rand_rho(da, seed), rand_rho(db, seed + 1)
    assert abs(linalg.trace(linalg.tensor(a, b)) - linalg.trace(a) * linalg.trace(b)) < 1e-12


def test_partial_trace_recovers_product_factor():
    a, b = rand_rho(3, 10), rand_rho(4, 11)
    ab = linalg.tensor(a, b)
    assert np.allclose(linalg.partial_trace(ab, [3, 4], 0), a, atol=1e-12)
    assert np.allclose(linalg.partial_trace(ab, [3, 4], 1), b, atol=1e-12)


def test_partial_trace_bell_state():
    phi = np.array([1, 0, 0, 1]) / np.sqrt(2)
    rho = np.outer(phi, phi.conj())
    expected = partial_trace_sum(rho, [2, 2], 0)
    assert np.allclose(expected, np.eye(2) / 2, atol=1e-15)
    assert np.allclose(linalg.partial_trace(rho, [2, 2], 0), expected, atol=1e-12)


def test_partial_trace_three_voter_basis_profile():
    # |R1 (x) R2 (x) R3><.| with R = indices 1, 4, 5 of a 6-dim space
    kets = [np.eye(6)[i] for i in (1, 4, 5)]
    psi = np.kron(np.kron(kets[0], kets[1]), kets[2])
    rho = np.outer(psi, psi)
    out = linalg.partial_trace(rho, [6, 6, 6], 1)
    assert np.array_equal(out, np.diag(np.eye(6)[4]).astype(complex))
    assert np.allclose(out, partial_trace_sum(rho, [6, 6, 6], 1), atol=1e-12)


def test_partial_trace_errors():
    with pytest.raises(DimensionError):
        linalg.partial_trace(np.eye(6), [2, 2], 0)
    with pytest.raises(DimensionError):
        linalg.partial_trace(np.eye(4), [2, 2], 2)


@settings(max_examples=25)
@given(st.lists(st.integers(1, 3), min_size=1, max_size=3), st.integers(0, 2**32 - 1), st.data())
def test_partial_trace_preserves_trace_and_density(dims, seed, data):
    keep = data.draw(st.integers(0, len(dims) - 1))
    rho = rand_rho(int(np.prod(dims)), seed)
    red = linalg.partial_trace(rho, dims, keep)
    assert abs(linalg.trace(red) - linalg.trace(rho)) < 1e-12
    linalg.validate_density(red, 1e-9)
    assert np.allclose(red, partial_trace_sum(rho, dims, keep), atol=1e-12)


def test_conjugate_by_projector_examples():
    rho = rand_rho(3, 4)
    assert np.allclose(linalg.conjugate_by_projector(np.eye(3), rho), rho)
    out = linalg.conjugate_by_projector(np.diag([1, 0]), np.diag([0.3, 0.7]))
    assert np.allclose(out, np.diag([0.3, 0]))
    p = pair_projector(0, 1, 3).matrix
    out = linalg.conjugate_by_projector(p, np.eye(6) / 6)
    assert np.allclose(out, np.diag([1, 1, 0, 0, 1, 0]) / 6)
    assert abs(linalg.trace(out) - 0.5) < 1e-12


def test_conjugate_by_projector_rejects_bad_input():
    with pytest.raises(DimensionError):
        linalg.conjugate_by_projector(np.eye(2), np.eye(3))
    with pytest.raises(DimensionError):
        linalg.conjugate_by_projector(np.array([[1, 1], [0, 0]]), np.eye(2))


@settings(max_examples=30)
@given(st.integers(0, 2**32 - 1), st.integers(0, 14))
def test_projector_cyclicity(seed, pair_code):
    pairs = [(a, b) for a in range(3) for b in range(3) if a != b]
    x, y = pairs[pair_code % 6]
    p = pair_projector(x, y, 3).matrix
    rho = rand_rho(6, seed)
    lhs = linalg.trace(linalg.conjugate_by_projector(p, rho))
    assert abs(lhs - linalg.trace(p @ rho)) < 1e-12
    assert lhs.real <= linalg.trace(rho).real + 1e-12


def test_validate_density_accepts_and_rejects():
    d = linalg.validate_density(np.eye(6) / 6, 1e-9)
    assert d.dim == 6 and not d.matrix.flags.writeable
    with pytest.raises(TraceError):
        linalg.validate_density(np.eye(6) / 3, 1e-9)
    with pytest.raises(NotPSDError):
        linalg.validate_density(np.diag([1.1, -0.1]), 1e-9)
    with pytest.raises(NotHermitianError):
        linalg.validate_density(np.array([[0.5, 0.2], [0.0, 0.5]]), 1e-9)


def test_error_codes_are_distinct():
    codes = {NotHermitianError.code, TraceError.code, NotPSDError.code}
    assert len(codes) == 3


def test_psd_diagonal_fast_path_agrees_with_dense_path():
    rng = np.random.default_rng(7)
    for _ in range(50):
        d = rng.normal(size=6)
        diag = np.diag(d).astype(complex)
        dense = float(np.linalg.eigvalsh(diag)[0])
        assert linalg.min_eigenvalue(diag) == pytest.approx(dense, abs=1e-12)


def test_nonfinite_rejected():
    with pytest.raises(DimensionError):
        linalg.as_matrix([[np.nan, 0], [0, 1]])
