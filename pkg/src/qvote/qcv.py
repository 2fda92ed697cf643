"""Quantum Condorcet Voting.

The channel is defined on basis profiles by six steps (Condorcet scores,
weak order, linear extensions, uniform mixture, minority shot, unanimity
enforcement) and extended to arbitrary profiles by dephasing in the joint
preference basis and mixing the per-component outputs.
"""
from dataclasses import dataclass
from math import factorial

import numpy as np

from . import linalg
from .ballots import BasisProfile, dephase_decompose, dim_to_m, pair_projector
from .errors import DegenerateProjectionError, ParameterError
from .orders import (condorcet_scores, index_to_order, linear_extensions, order_to_index,
                     ordered_pairs, ranks_above, weak_order_from_scores)

DEFAULT_DELTA = 0.05
DEGENERATE_CUTOFF = 1e-12


@dataclass(frozen=True)
class QcvParams:
    """Minority-shot weight ``delta`` and validation tolerance."""

    delta: float = DEFAULT_DELTA
    tolerance: float = linalg.VALIDATION_TOL

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ParameterError(f"tolerance must be positive, got {self.tolerance}")
        if not self.delta > 0:
            raise ParameterError(f"delta must be positive, got {self.delta}")

    def check(self, m):
        """Raise :class:`ParameterError` unless ``delta < 1/m**2``."""
        if not 0 < self.delta < 1 / m**2:
            raise ParameterError(
                f"delta={self.delta} violates 0 < delta < 1/m^2 = {1 / m**2:.6g}")


@dataclass(frozen=True, eq=False)
class QcvTrace:
    """Intermediate results of one basis-profile evaluation."""

    scores: dict
    weak_order: tuple
    extensions: list
    sigma1: linalg.DensityOperator
    sigma2: linalg.DensityOperator
    sigma3: linalg.DensityOperator
    minority_pairs: list
    unanimous_pairs: list
    renormalization_factor: float


def _diag_state(diag, tol):
    return linalg.validate_density(np.diag(diag).astype(np.complex128), tol)


def qcv_basis(profile, params=None):
    """Run the six QCV steps on a basis profile.

    Parameters
    ----------
    profile : BasisProfile or sequence of orders
    params : QcvParams, optional

    Returns
    -------
    (DensityOperator, QcvTrace)
        The renormalized output state and the intermediate states.
    """
    params = params or QcvParams()
    if not isinstance(profile, BasisProfile):
        profile = BasisProfile(profile)
    n, m = profile.n, profile.m
    if n < 2 or m < 2:
        raise ParameterError(f"need n >= 2 and m >= 2, got n={n}, m={m}")
    params.check(m)
    tol = params.tolerance
    dim = factorial(m)
    orders = profile.orders

    scores = condorcet_scores(orders)
    weak = weak_order_from_scores(scores)
    exts = linear_extensions(weak)

    sigma1 = np.zeros(dim)
    sigma1[[order_to_index(o) for o in exts]] = 1.0 / len(exts)

    pairs = ordered_pairs(m)
    minority = [p for p in pairs if any(ranks_above(o, *p) for o in orders)]
    sigma2 = (1 - len(minority) * params.delta) * sigma1
    for x, y in minority:
        proj = pair_projector(x, y, m)
        sigma2 = sigma2 + params.delta * proj.mask / proj.rank

    unanimous = [p for p in pairs if all(ranks_above(o, *p) for o in orders)]
    keep = np.ones(dim, dtype=bool)
    for x, y in unanimous:
        keep &= pair_projector(x, y, m).mask
    sigma3 = np.where(keep, sigma2, 0.0)
    factor = float(sigma3.sum())
    if factor < DEGENERATE_CUTOFF:
        raise DegenerateProjectionError(
            f"unanimity projection left weight {factor:.3e}")
    sigma3 = sigma3 / factor

    out = _diag_state(sigma3, tol)
    trace = QcvTrace(scores=scores, weak_order=weak, extensions=exts,
                     sigma1=_diag_state(sigma1, tol), sigma2=_diag_state(sigma2, tol),
                     sigma3=out, minority_pairs=minority, unanimous_pairs=unanimous,
                     renormalization_factor=factor)
    return out, trace


def qcv(profile, params=None):
    """Apply the channel to an arbitrary profile state.

    The profile is dephased in the joint preference basis; each basis
    component goes through :func:`qcv_basis` and the outputs are mixed with
    the component weights, summed in joint-index order.
    """
    params = params or QcvParams()
    if isinstance(profile, BasisProfile):
        return qcv_basis(profile, params)[0]
    params.check(profile.m)
    out = np.zeros(factorial(profile.m))
    for w, bp in dephase_decompose(profile):
        out += w * qcv_basis(bp, params)[0].matrix.diagonal().real
    return _diag_state(out, params.tolerance)


def qcv_components(profile, params=None):
    """``[(weight, BasisProfile, QcvTrace)]`` for every dephased component."""
    params = params or QcvParams()
    return [(w, bp, qcv_basis(bp, params)[1]) for w, bp in dephase_decompose(profile)]


def make_rule(params=None):
    """The channel as a one-argument rule ``ProfileState -> DensityOperator``."""
    params = params or QcvParams()

    def rule(profile):
        return qcv(profile, params)

    rule.__name__ = f"qcv(delta={params.delta:g})"
    return rule


def measure_outcome(d, rng):
    """Measure ``d`` in the preference basis.

    Parameters
    ----------
    d : DensityOperator or array_like
        State on the ``m!``-dimensional ballot space.
    rng : numpy.random.Generator

    Returns
    -------
    (tuple, float)
        Sampled linear order and its exact probability (the diagonal entry).
    """
    mat = linalg.as_matrix(d)
    m = dim_to_m(mat.shape[0])
    probs = np.clip(mat.diagonal().real, 0.0, None)
    idx = int(rng.choice(len(probs), p=probs / probs.sum()))
    return index_to_order(idx, m), float(mat[idx, idx].real)
