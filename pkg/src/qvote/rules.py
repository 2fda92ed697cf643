"""Reference quantum rules that each break at least one axiom.

These serve as mutation targets for the axiom checkers.  Every rule maps a
:class:`~qvote.ballots.ProfileState` to a density matrix on the ballot space.
"""
from math import factorial

import numpy as np

from .ballots import dephase_decompose, reduced_ballot
from .orders import order_to_index


def constant_mixed_rule(m):
    """Always the maximally mixed state ``I / m!``."""
    dim = factorial(m)
    out = np.eye(dim, dtype=np.complex128) / dim

    def rule(profile):
        return out

    rule.__name__ = f"constant-I/{dim}"
    return rule


def constant_order_rule(order):
    """Always the basis state of ``order``."""
    dim = factorial(len(order))
    out = np.zeros((dim, dim), dtype=np.complex128)
    i = order_to_index(tuple(order))
    out[i, i] = 1.0

    def rule(profile):
        return out

    rule.__name__ = "constant-" + "".join(map(str, order))
    return rule


def ballot_rule(voter=0):
    """Return voter ``voter``'s reduced ballot unchanged (a dictator)."""
    def rule(profile):
        return reduced_ballot(profile, voter).state.matrix

    rule.__name__ = f"ballot-{voter}"
    return rule


def classical_rule(swf):
    """Lift a classical SWF: dephase, apply ``swf`` per component, mix."""
    def rule(profile):
        dim = factorial(profile.m)
        diag = np.zeros(dim)
        for w, bp in dephase_decompose(profile):
            diag[order_to_index(tuple(swf(bp.orders)))] += w
        return np.diag(diag).astype(np.complex128)

    rule.__name__ = f"classical({getattr(swf, '__name__', 'swf')})"
    return rule
