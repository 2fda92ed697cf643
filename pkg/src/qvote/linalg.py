"""Dense complex linear algebra for finite-dimensional density operators.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  The
only wrapper type is :class:`DensityOperator`, which records that a matrix
passed validation.
"""
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import DimensionError, NotHermitianError, NotPSDError, TraceError

VALIDATION_TOL = 1e-9
IDENTITY_TOL = 1e-12


def as_matrix(a):
    """Return ``a`` as a finite 2-D complex128 array.

    Accepts arrays, nested sequences and :class:`DensityOperator`.
    """
    if isinstance(a, DensityOperator):
        return a.matrix
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DimensionError("matrix has non-finite entries")
    return m


def _square(a):
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return m


def _is_diagonal(m):
    return not np.any(m[~np.eye(m.shape[0], dtype=bool)])


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """A validated density operator.

    Use :func:`validate_density` to construct one.  The wrapped matrix is
    marked read-only.
    """

    matrix: np.ndarray
    tolerance: float = VALIDATION_TOL

    @property
    def dim(self):
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.matrix
        return self.matrix.astype(dtype)

    def diagonal(self):
        """Real parts of the diagonal entries."""
        return self.matrix.diagonal().real.copy()


def tensor(a, b):
    """Kronecker product ``a ⊗ b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def tensor_all(mats):
    """Left-to-right Kronecker product of a non-empty sequence."""
    mats = list(mats)
    if not mats:
        raise DimensionError("tensor_all needs at least one factor")
    return reduce(tensor, mats)


def trace(a):
    """Sum of the diagonal of a square matrix, as a Python complex."""
    return complex(np.trace(_square(a)))


def partial_trace(rho, dims, keep):
    """Trace out every tensor factor except ``keep``.

    Parameters
    ----------
    rho : array_like
        Square matrix on ``H_0 ⊗ ... ⊗ H_{k-1}``.
    dims : sequence of int
        Factor dimensions, in tensor order.
    keep : int
        Index of the factor to keep.

    Returns
    -------
    numpy.ndarray
        ``dims[keep] x dims[keep]`` reduced matrix.
    """
    rho = _square(rho)
    dims = [int(d) for d in dims]
    if not dims or any(d < 1 for d in dims):
        raise DimensionError(f"invalid factor dimensions {dims}")
    total = int(np.prod(dims))
    if rho.shape[0] != total:
        raise DimensionError(
            f"matrix dim {rho.shape[0]} does not match product of dims {dims}")
    if not 0 <= keep < len(dims):
        raise DimensionError(f"keep={keep} out of range for {len(dims)} factors")
    before = int(np.prod(dims[:keep]))
    after = int(np.prod(dims[keep + 1:]))
    d = dims[keep]
    t = rho.reshape(before, d, after, before, d, after)
    return np.einsum("iajibj->ab", t)


def is_projector(p, tol=IDENTITY_TOL):
    p = _square(p)
    return bool(np.allclose(p @ p, p, rtol=0, atol=tol)
                and np.allclose(p, p.conj().T, rtol=0, atol=tol))


def conjugate_by_projector(p, rho):
    """Return ``p @ rho @ p`` after checking that ``p`` is a projector."""
    p = _square(p)
    rho = _square(rho)
    if p.shape != rho.shape:
        raise DimensionError(f"projector {p.shape} vs operator {rho.shape}")
    if not is_projector(p):
        raise DimensionError("first argument is not an orthogonal projector")
    return p @ rho @ p


def min_eigenvalue(a):
    """Smallest eigenvalue of the Hermitian part of ``a``.

    Diagonal inputs take a direct scan of the diagonal.
    """
    m = _square(a)
    if _is_diagonal(m):
        return float(m.diagonal().real.min())
    herm = (m + m.conj().T) / 2
    return float(np.linalg.eigvalsh(herm)[0])


def validate_density(a, tol=VALIDATION_TOL):
    """Check Hermiticity, unit trace and positivity within ``tol``.

    Raises
    ------
    NotHermitianError, TraceError, NotPSDError
        One per failed invariant, checked in that order.
    """
    m = _square(a)
    asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asym > tol:
        raise NotHermitianError(f"max |A - A*| = {asym:.3e} exceeds {tol:g}")
    tr = trace(m)
    if abs(tr - 1) > tol:
        raise TraceError(f"trace {tr:.12g} differs from 1 by more than {tol:g}")
    lam = min_eigenvalue(m)
    if lam < -tol:
        raise NotPSDError(f"smallest eigenvalue {lam:.3e} below -{tol:g}")
    frozen = m.copy()
    frozen.setflags(write=False)
    return DensityOperator(frozen, tol)


def is_density(a, tol=VALIDATION_TOL):
    try:
        validate_density(a, tol)
    except (NotHermitianError, TraceError, NotPSDError):
        return False
    return True


def random_density(dim, rng, rank=None):
    """Random density operator ``B B* / Tr(B B*)`` with complex Gaussian ``B``."""
    rank = dim if rank is None else rank
    b = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = b @ b.conj().T
    return rho / np.trace(rho).real


def max_offdiagonal(a):
    m = _square(a)
    off = m[~np.eye(m.shape[0], dtype=bool)]
    return float(np.abs(off).max()) if off.size else 0.0
