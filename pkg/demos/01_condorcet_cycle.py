# %% [markdown]
# # The Condorcet cycle
#
# Three voters, three candidates, each voter ranking a different rotation of
# x > y > z.  Classically there is no majority winner.  Here we push the
# profile through the quantum Condorcet channel step by step and look at
# why no voter can be a dictator.

# %%
import numpy as np

from qvote import BasisProfile, CandidateSet, QcvParams, basis_ballot, pair_weight, qcv_basis

cands = CandidateSet(("x", "y", "z"))
profile = BasisProfile(tuple(cands.parse_order(s) for s in ("x>y>z", "y>z>x", "z>x>y")))
out, trace = qcv_basis(profile, QcvParams(delta=0.05))

# %% [markdown]
# Every candidate wins exactly one pairwise contest, so all scores tie and
# the weak order has a single group.  All six linear orders extend it.

# %%
print("scores:", {cands.labels[c]: s for c, s in trace.scores.items()})
print("extensions:", [cands.format_order(o) for o in trace.extensions])

# %% [markdown]
# Every ordered pair is ranked that way by some voter, so the minority shot
# adds delta/3 on each of six half-spaces.  Those six projectors sum to 3 I,
# which keeps the state at I/6.  No pair is unanimous, so nothing is
# projected away.

# %%
print("minority pairs:", [cands.format_pair(p) for p in trace.minority_pairs])
print("unanimous pairs:", trace.unanimous_pairs)
print("output diagonal:", np.round(out.diagonal(), 12))

# %% [markdown]
# Each voter is certain about some pair the society is only 50/50 on, and
# the society gives positive weight to a pair the voter rules out.

# %%
for i, order in enumerate(profile.orders):
    ballot = basis_ballot(order).state
    sure = [p for p in trace.minority_pairs if pair_weight(ballot, *p) == 1.0]
    ruled_out = [p for p in trace.minority_pairs if pair_weight(ballot, *p) == 0.0]
    print(f"voter {i}: sure of {[cands.format_pair(p) for p in sure]} (society: "
          f"{[round(pair_weight(out, *p), 12) for p in sure]}), rules out "
          f"{[cands.format_pair(p) for p in ruled_out]} (society: "
          f"{[round(pair_weight(out, *p), 12) for p in ruled_out]})")
