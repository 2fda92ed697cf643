"""Linear orders, their basis indices, pairwise tallies and Condorcet scores.

A linear order is a tuple of candidate indices, best first: ``(0, 2, 1)``
reads ``c0 > c2 > c1``.  Basis indices are Lehmer codes, so index order
coincides with lexicographic order of the rankings and index 0 is the
identity ranking.
"""
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial, prod


@dataclass(frozen=True)
class CandidateSet:
    """Named candidates; position in ``labels`` is the candidate index."""

    labels: tuple

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) < 2:
            raise ValueError("need at least two candidates")
        if len(set(labels)) != len(labels):
            raise ValueError(f"candidate labels are not distinct: {labels}")
        for s in labels:
            if not s or any(c in s for c in " \t>,+#:"):
                raise ValueError(f"invalid candidate label {s!r}")

    @classmethod
    def default(cls, m):
        """``x, y, z`` for m=3, else ``c0 .. c{m-1}``."""
        if m == 3:
            return cls(("x", "y", "z"))
        return cls(tuple(f"c{i}" for i in range(m)))

    @property
    def m(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown candidate {label!r}") from None

    def parse_order(self, text):
        """Parse ``"x>y>z"`` into a linear order of indices."""
        parts = [p.strip() for p in text.split(">")]
        order = tuple(self.index(p) for p in parts)
        check_order(order, self.m)
        return order

    def format_order(self, order):
        return ">".join(self.labels[c] for c in order)

    def format_pair(self, pair):
        return f"{self.labels[pair[0]]}>{self.labels[pair[1]]}"


def check_order(order, m=None):
    """Raise ``ValueError`` unless ``order`` is a permutation of ``range(m)``."""
    m = len(order) if m is None else m
    if len(order) != m or sorted(order) != list(range(m)):
        raise ValueError(f"{order!r} is not a linear order on {m} candidates")


def all_orders(m):
    """Every linear order on ``m`` candidates, in basis-index order."""
    return list(permutations(range(m)))


def order_to_index(order):
    """Lehmer-code rank of ``order`` among the ``m!`` linear orders."""
    m = len(order)
    check_order(order, m)
    idx = 0
    for i, c in enumerate(order):
        smaller_later = sum(1 for d in order[i + 1:] if d < c)
        idx += smaller_later * factorial(m - 1 - i)
    return idx


def index_to_order(index, m):
    """Inverse of :func:`order_to_index`."""
    if not 0 <= index < factorial(m):
        raise ValueError(f"index {index} out of range for m={m}")
    pool = list(range(m))
    order = []
    for i in range(m - 1, -1, -1):
        digit, index = divmod(index, factorial(i))
        order.append(pool.pop(digit))
    return tuple(order)


def ranks_above(order, x, y):
    """True iff ``order`` places candidate ``x`` above candidate ``y``."""
    return order.index(x) < order.index(y)


def ordered_pairs(m):
    """All ordered pairs of distinct candidates, sorted."""
    return [(x, y) for x in range(m) for y in range(m) if x != y]


def check_profile(profile):
    if len(profile) < 2:
        raise ValueError("a profile needs at least two voters")
    m = len(profile[0])
    for order in profile:
        check_order(order, m)
    return m


def pairwise_tally(profile, x, y):
    """Number of voters ranking ``x`` above ``y``."""
    if x == y:
        raise ValueError("pairwise_tally needs two distinct candidates")
    return sum(1 for order in profile if ranks_above(order, x, y))


def condorcet_scores(profile):
    """Condorcet score of every candidate.

    A candidate scores one point per opponent it beats or ties in the
    pairwise majority comparison, so both sides of a tie score.

    Returns
    -------
    dict
        Candidate index -> score in ``0 .. m-1``.
    """
    m = check_profile(profile)
    n = len(profile)
    scores = {c: 0 for c in range(m)}
    for x, y in ordered_pairs(m):
        wins = pairwise_tally(profile, x, y)
        if wins >= n - wins:
            scores[x] += 1
    return scores


def weak_order_from_scores(scores):
    """Group candidates by equal score, highest score first.

    Returns
    -------
    tuple of frozenset
        Tie groups, best group first.
    """
    levels = sorted(set(scores.values()), reverse=True)
    return tuple(frozenset(c for c, s in scores.items() if s == lvl)
                 for lvl in levels)


def check_weak_order(weak_order, m=None):
    members = [c for g in weak_order for c in g]
    m = len(members) if m is None else m
    if any(not g for g in weak_order) or sorted(members) != list(range(m)):
        raise ValueError(f"{weak_order!r} does not partition {m} candidates")


def linear_extensions(weak_order):
    """All linear orders that refine ``weak_order``, sorted by basis index.

    There are ``prod(len(g)!)`` of them: candidates are sorted by group and
    permuted freely inside each group.
    """
    check_weak_order(weak_order)
    blocks = [permutations(sorted(g)) for g in weak_order]
    exts = [tuple(c for block in combo for c in block) for combo in product(*blocks)]
    return sorted(exts, key=order_to_index)


def extension_count(weak_order):
    return prod(factorial(len(g)) for g in weak_order)
