"""Straight-line recomputation of one Condorcet-channel run.

Fixed to m=3 candidates (x, y, z); the default profile is
(x>y>z, x>y>z, x>z>y).  Uses plain Python lists and itertools only so it
stays independent of the ``qvote`` package.  Run as a script to print the
diagonal that ``tests/test_acceptance.py`` freezes.
"""
from fractions import Fraction
from itertools import permutations

DELTA = Fraction(1, 20)

# basis: lexicographic permutations of (0, 1, 2) == x, y, z
BASIS = list(permutations(range(3)))
PROFILE = [(0, 1, 2), (0, 1, 2), (0, 2, 1)]
PAIRS = [(a, b) for a in range(3) for b in range(3) if a != b]


def above(order, a, b):
    return order.index(a) < order.index(b)


def run(delta=DELTA, profile=PROFILE):
    n = len(profile)
    # step 1: ties count for both sides
    score = [0, 0, 0]
    for a, b in PAIRS:
        ab = sum(above(o, a, b) for o in profile)
        if ab >= n - ab:
            score[a] += 1
    # steps 2-3: orders sorted by non-increasing score
    ext = [o for o in BASIS
           if all(score[o[i]] >= score[o[i + 1]] for i in range(2))]
    # step 4
    sigma = [Fraction(0)] * 6
    for o in ext:
        sigma[BASIS.index(o)] += Fraction(1, len(ext))
    # step 5: normalized projectors
    minority = [(a, b) for a, b in PAIRS if any(above(o, a, b) for o in profile)]
    k = len(minority)
    sigma = [(1 - k * delta) * s for s in sigma]
    for a, b in minority:
        for idx, o in enumerate(BASIS):
            if above(o, a, b):
                sigma[idx] += delta / 3
    # step 6
    unanimous = [(a, b) for a, b in PAIRS if all(above(o, a, b) for o in profile)]
    for idx, o in enumerate(BASIS):
        if not all(above(o, a, b) for a, b in unanimous):
            sigma[idx] = Fraction(0)
    total = sum(sigma)
    return [s / total for s in sigma]


if __name__ == "__main__":
    for o, w in zip(BASIS, run()):
        print("".join("xyz"[c] for c in o), w, float(w))
