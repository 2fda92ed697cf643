"""Families of profile states and of profile pairs fed to the axiom checkers."""
from dataclasses import dataclass, field
from itertools import product
from math import factorial

import numpy as np

from .ballots import BasisProfile, dephase_decompose, mixed_ballot, mixture_state, profile_state
from .errors import SizeError
from .orders import CandidateSet, all_orders, ordered_pairs, ranks_above

MAX_EXHAUSTIVE = 1296
KINDS = ("exhaustive-basis", "random-mixed", "explicit")


def cyclic_profile(n, m):
    """Voter ``i`` ranks the identity order rotated left by ``i``.

    For n = m = 3 this is the Condorcet cycle (x>y>z, y>z>x, z>x>y).
    """
    base = list(range(m))
    return BasisProfile(tuple(tuple(base[i % m:] + base[:i % m]) for i in range(n)))


def basis_profiles(n, m):
    """All ``(m!)**n`` basis profiles in joint-index order."""
    return [BasisProfile(p) for p in product(all_orders(m), repeat=n)]


def _orders_with(m, x, y):
    return [o for o in all_orders(m) if ranks_above(o, x, y)]


def random_dephased_profile(n, m, rng):
    """A random diagonal profile state.

    Half of the draws are correlated mixtures of 1-4 basis profiles (with
    probability 1/2 all constrained to agree on one random pair, so sharp
    preconditions fire); the other half are products of sparse mixed
    ballots.
    """
    orders = all_orders(m)
    pairs = ordered_pairs(m)
    if rng.random() < 0.5:
        k = int(rng.integers(1, 5))
        pool = orders
        if rng.random() < 0.5:
            x, y = pairs[int(rng.integers(len(pairs)))]
            pool = _orders_with(m, x, y)
        weights = rng.dirichlet(np.ones(k))
        comps = [(float(w), BasisProfile(tuple(pool[int(j)] for j in rng.integers(len(pool), size=n))))
                 for w in weights]
        return mixture_state(comps, n, m)
    ballots = []
    for i in range(n):
        support = int(rng.integers(1, min(3, len(orders)) + 1))
        chosen = rng.choice(len(orders), size=support, replace=False)
        weights = rng.dirichlet(np.ones(support))
        ballots.append(mixed_ballot([(float(w), orders[int(j)]) for w, j in zip(weights, chosen)], owner=i))
    return profile_state(ballots)


@dataclass
class ProfileFamily:
    """A finite collection of profile states.

    Parameters
    ----------
    kind : str
        ``exhaustive-basis``, ``random-mixed`` or ``explicit``.
    n, m : int
        Voters and candidates.
    samples : int
        Number of random profiles (``random-mixed`` only).
    seed : int
        Seed for ``random-mixed``.
    explicit : list
        ProfileState or BasisProfile entries (``explicit`` only).
    """

    kind: str
    n: int
    m: int
    samples: int = 0
    seed: int = 0
    explicit: list = field(default_factory=list)
    candidates: CandidateSet = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.candidates is None:
            self.candidates = CandidateSet.default(self.m)
        if self.kind == "exhaustive-basis" and factorial(self.m) ** self.n > MAX_EXHAUSTIVE:
            raise SizeError(f"(m!)^n = {factorial(self.m) ** self.n} exceeds {MAX_EXHAUSTIVE}")
        self._cache = None

    def profiles(self):
        """The family's members as a list of :class:`ProfileState`."""
        if self._cache is None:
            if self.kind == "exhaustive-basis":
                states = [bp.state() for bp in basis_profiles(self.n, self.m)]
            elif self.kind == "random-mixed":
                rng = np.random.default_rng(self.seed)
                states = [random_dephased_profile(self.n, self.m, rng) for _ in range(self.samples)]
            else:
                states = [p.state() if isinstance(p, BasisProfile) else p for p in self.explicit]
            self._cache = states
        return self._cache

    def __len__(self):
        if self.kind == "exhaustive-basis":
            return factorial(self.m) ** self.n
        if self.kind == "random-mixed":
            return self.samples
        return len(self.explicit)

    @classmethod
    def exhaustive(cls, n, m, **kw):
        return cls("exhaustive-basis", n, m, **kw)

    @classmethod
    def random(cls, n, m, samples, seed, **kw):
        return cls("random-mixed", n, m, samples=samples, seed=seed, **kw)

    @classmethod
    def of(cls, profiles, **kw):
        profiles = list(profiles)
        first = profiles[0]
        return cls("explicit", first.n, first.m, explicit=profiles, **kw)


@dataclass
class ProfilePairs:
    """Ordered pairs ``(profiles[a], profiles[b])`` for the QIIA checkers.

    ``index_pairs`` of ``None`` means every ordered pair, self-pairs included.
    """

    profiles: list
    index_pairs: list = None
    n: int = 0
    m: int = 0
    candidates: CandidateSet = None

    def __post_init__(self):
        if self.profiles and not self.n:
            self.n, self.m = self.profiles[0].n, self.profiles[0].m
        if self.candidates is None and self.m:
            self.candidates = CandidateSet.default(self.m)

    def __len__(self):
        if self.index_pairs is None:
            return len(self.profiles) ** 2
        return len(self.index_pairs)

    def index_arrays(self):
        if self.index_pairs is None:
            p = len(self.profiles)
            a, b = np.divmod(np.arange(p * p), p)
            return a, b
        arr = np.asarray(self.index_pairs, dtype=np.intp).reshape(-1, 2)
        return arr[:, 0], arr[:, 1]


def _swap_preserving(order, x, y, rng, m):
    """Random order with the same x-versus-y direction as ``order``."""
    pool = _orders_with(m, x, y) if ranks_above(order, x, y) else _orders_with(m, y, x)
    return pool[int(rng.integers(len(pool)))]


def matched_partner(profile, x, y, rng):
    """A dephased profile with the same per-voter (x, y) and (y, x) weights.

    Every voter's order in every basis component is replaced by a random
    order with the same x-versus-y direction, so third-candidate placement
    changes while the reduced pair weights stay fixed.
    """
    comps = []
    for w, bp in dephase_decompose(profile):
        new = tuple(_swap_preserving(o, x, y, rng, profile.m) for o in bp.orders)
        comps.append((w, BasisProfile(new)))
    return mixture_state(comps, profile.n, profile.m)


def similar_profile_pairs(family, strategy="all", seed=0, count=200, pairs=None):
    """Build a :class:`ProfilePairs` collection from ``family``.

    Parameters
    ----------
    family : ProfileFamily
    strategy : str
        ``all``: every ordered pair of family members (checkers filter the
        unmatched ones).  ``agreeing``: only basis pairs whose voters agree
        on the direction of at least one candidate pair.  ``identical``:
        each member with itself.  ``mixed``: ``count`` constructed pairs,
        each a dephased member (or random mixture if the family is
        exhaustive) and a matched partner for a random candidate pair,
        listed in both orders.
    seed : int
        Seed for ``mixed``.
    pairs : list of (int, int), optional
        Candidate pairs to draw from in ``mixed``; default all.
    """
    n, m = family.n, family.m
    cands = family.candidates
    if strategy == "all":
        return ProfilePairs(family.profiles(), None, n, m, cands)
    if strategy == "identical":
        profs = family.profiles()
        return ProfilePairs(profs, [(i, i) for i in range(len(profs))], n, m, cands)
    if strategy == "agreeing":
        profs = family.profiles()
        dirs = []
        for p in profs:
            comps = dephase_decompose(p)
            if len(comps) != 1:
                raise ValueError("the agreeing strategy needs basis profiles")
            bp = comps[0][1]
            dirs.append({(x, y): tuple(ranks_above(o, x, y) for o in bp.orders)
                         for x, y in ordered_pairs(m)})
        idx = [(a, b) for a in range(len(profs)) for b in range(len(profs))
               if any(dirs[a][p] == dirs[b][p] for p in dirs[a])]
        return ProfilePairs(profs, idx, n, m, cands)
    if strategy == "mixed":
        rng = np.random.default_rng(seed)
        choices = pairs or ordered_pairs(m)
        base = None if family.kind == "exhaustive-basis" else family.profiles()
        profs, idx = [], []
        for k in range(count):
            if base is not None:
                rho = base[k % len(base)]
            else:
                rho = random_dephased_profile(n, m, rng)
            x, y = choices[int(rng.integers(len(choices)))]
            profs.extend([rho, matched_partner(rho, x, y, rng)])
            idx += [(2 * k, 2 * k + 1), (2 * k + 1, 2 * k)]
        return ProfilePairs(profs, idx, n, m, cands)
    raise ValueError(f"unknown pairing strategy {strategy!r}")
