"""Quantum ballots in the preference basis.

Each voter's space has one basis vector per linear order (dimension ``m!``),
indexed by :func:`qvote.orders.order_to_index`.  A joint basis index is the
mixed-radix number whose digits are the voters' order indices, voter 0 most
significant, which matches the Kronecker ordering of :func:`linalg.tensor`.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from . import linalg
from .errors import DimensionError, NumericError
from .orders import all_orders, check_order, index_to_order, order_to_index, ranks_above

DEPHASE_CUTOFF = 1e-12


def dim_to_m(dim):
    """Number of candidates ``m`` with ``m! == dim``."""
    m, f = 1, 1
    while f < dim:
        m += 1
        f *= m
    if f != dim or m < 2:
        raise DimensionError(f"dimension {dim} is not m! for any m >= 2")
    return m


@dataclass(frozen=True, eq=False)
class PairProjector:
    """Diagonal projector onto the orders that rank ``pair[0]`` above ``pair[1]``."""

    pair: tuple
    matrix: np.ndarray
    mask: np.ndarray

    @property
    def rank(self):
        return int(self.mask.sum())


@dataclass(frozen=True, eq=False)
class Ballot:
    """One voter's density operator on the ``m!``-dimensional ballot space."""

    state: linalg.DensityOperator
    owner: int = 0

    @property
    def m(self):
        return dim_to_m(self.state.dim)


@dataclass(frozen=True, eq=False)
class ProfileState:
    """Joint density operator of ``n`` voters over ``m`` candidates."""

    state: linalg.DensityOperator
    n: int
    m: int

    def __post_init__(self):
        if self.state.dim != factorial(self.m) ** self.n:
            raise DimensionError(
                f"dim {self.state.dim} != ({self.m}!)^{self.n}")

    @property
    def dims(self):
        return [factorial(self.m)] * self.n


@dataclass(frozen=True)
class BasisProfile:
    """A classical profile viewed as a tensor product of basis ballots."""

    orders: tuple

    def __post_init__(self):
        orders = tuple(tuple(o) for o in self.orders)
        object.__setattr__(self, "orders", orders)
        if not orders:
            raise ValueError("empty profile")
        for o in orders:
            check_order(o, len(orders[0]))

    @property
    def n(self):
        return len(self.orders)

    @property
    def m(self):
        return len(self.orders[0])

    def joint_index(self):
        base = factorial(self.m)
        idx = 0
        for o in self.orders:
            idx = idx * base + order_to_index(o)
        return idx

    @classmethod
    def from_joint_index(cls, index, n, m):
        base = factorial(m)
        digits = []
        for _ in range(n):
            index, d = divmod(index, base)
            digits.append(d)
        if index:
            raise ValueError("joint index out of range")
        return cls(tuple(index_to_order(d, m) for d in reversed(digits)))

    def state(self):
        """The profile's density operator as a :class:`ProfileState`."""
        dim = factorial(self.m) ** self.n
        mat = np.zeros((dim, dim), dtype=np.complex128)
        j = self.joint_index()
        mat[j, j] = 1.0
        return ProfileState(linalg.validate_density(mat), self.n, self.m)


def basis_ballot(order, owner=0):
    """``|R><R|`` for the linear order ``R``."""
    check_order(order)
    dim = factorial(len(order))
    mat = np.zeros((dim, dim), dtype=np.complex128)
    i = order_to_index(order)
    mat[i, i] = 1.0
    return Ballot(linalg.validate_density(mat), owner)


def mixed_ballot(components, owner=0, tol=linalg.VALIDATION_TOL):
    """Diagonal ballot ``sum_k w_k |R_k><R_k|``.

    Parameters
    ----------
    components : iterable of (float, order)
        Weights must sum to 1 within ``tol``.
    """
    components = list(components)
    if not components:
        raise ValueError("empty mixture")
    m = len(components[0][1])
    dim = factorial(m)
    diag = np.zeros(dim)
    for w, order in components:
        check_order(order, m)
        if w < 0:
            raise ValueError(f"negative mixture weight {w}")
        diag[order_to_index(order)] += w
    return Ballot(linalg.validate_density(np.diag(diag).astype(np.complex128), tol), owner)


@lru_cache(maxsize=None)
def _projector_mask(m, x, y):
    mask = np.array([ranks_above(o, x, y) for o in all_orders(m)])
    mask.setflags(write=False)
    return mask


def pair_projector(x, y, m):
    """Projector onto the span of orders ranking ``x`` above ``y``."""
    if x == y:
        raise ValueError("pair_projector needs two distinct candidates")
    if not (0 <= x < m and 0 <= y < m):
        raise ValueError(f"candidates ({x}, {y}) out of range for m={m}")
    mask = _projector_mask(m, x, y)
    mat = np.diag(mask.astype(np.complex128))
    mat.setflags(write=False)
    return PairProjector((x, y), mat, mask)


def profile_state(ballots):
    """Tensor product of per-voter ballots, in voter order."""
    ballots = list(ballots)
    if len(ballots) < 2:
        raise ValueError("a profile needs at least two ballots")
    dims = {b.state.dim for b in ballots}
    if len(dims) != 1:
        raise DimensionError(f"ballots have different dimensions {sorted(dims)}")
    joint = linalg.tensor_all(b.state.matrix for b in ballots)
    return ProfileState(linalg.validate_density(joint), len(ballots), ballots[0].m)


def mixture_state(components, n, m, tol=linalg.VALIDATION_TOL):
    """Dephased profile ``sum_k w_k |B_k><B_k|`` over basis profiles ``B_k``."""
    dim = factorial(m) ** n
    diag = np.zeros(dim)
    for w, bp in components:
        if not isinstance(bp, BasisProfile):
            bp = BasisProfile(bp)
        if (bp.n, bp.m) != (n, m):
            raise DimensionError(f"component has shape n={bp.n}, m={bp.m}")
        diag[bp.joint_index()] += w
    mat = np.diag(diag).astype(np.complex128)
    return ProfileState(linalg.validate_density(mat, tol), n, m)


def reduced_ballot(profile, i):
    """Voter ``i``'s reduced state, tracing out every other voter."""
    if not 0 <= i < profile.n:
        raise IndexError(f"voter {i} out of range for n={profile.n}")
    red = linalg.partial_trace(profile.state.matrix, profile.dims, i)
    return Ballot(linalg.validate_density(red, profile.state.tolerance), i)


def pair_weight(d, x, y, tol=linalg.VALIDATION_TOL):
    """Probability ``Tr(Pi^{x>y} d)`` that measuring ``d`` ranks x above y."""
    mat = d.state.matrix if isinstance(d, Ballot) else linalg.as_matrix(d)
    m = dim_to_m(mat.shape[0])
    mask = pair_projector(x, y, m).mask
    w = float(mat.diagonal().real[mask].sum())
    if w < -tol or w > 1 + tol:
        raise NumericError(f"pair weight {w!r} outside [0, 1]")
    return min(1.0, max(0.0, w))


def pair_weight_table(d):
    """``{(x, y): pair_weight(d, x, y)}`` for every ordered pair."""
    mat = linalg.as_matrix(d)
    m = dim_to_m(mat.shape[0])
    return {(x, y): pair_weight(mat, x, y)
            for x in range(m) for y in range(m) if x != y}


def encodes(profile, i, x, y):
    """True iff voter ``i`` of a basis profile ranks ``x`` above ``y``."""
    return ranks_above(profile.orders[i], x, y)


def dephase_decompose(profile):
    """Read the joint diagonal as a mixture of basis profiles.

    Off-diagonal entries are ignored.  Components with weight at most
    ``DEPHASE_CUTOFF`` are dropped.

    Returns
    -------
    list of (float, BasisProfile)
        In increasing joint-index order.
    """
    diag = profile.state.matrix.diagonal().real
    idx = np.flatnonzero(diag > DEPHASE_CUTOFF)
    return [(float(diag[j]), BasisProfile.from_joint_index(int(j), profile.n, profile.m))
            for j in idx]
