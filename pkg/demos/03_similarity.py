# %% [markdown]
# # When are two profiles "similar" on a pair?
#
# Take one voter who is 99% sure of x > y > z, and another copy of that
# voter who is 99% sure of y > x > z.  Both give positive weight to x > y
# and to y > x, so a support-only criterion calls them similar on (x, y).
# Comparing the actual weights does not.

# %%
from qvote import CandidateSet, basis_ballot, mixed_ballot, profile_state, similar
from qvote.axioms import check_sharp_qiia
from qvote.families import ProfilePairs
from qvote.qcv import make_rule

c = CandidateSet(("x", "y", "z"))
rho = profile_state([mixed_ballot([(0.99, c.parse_order("x>y>z")), (0.01, c.parse_order("y>x>z"))], 0),
                     basis_ballot(c.parse_order("x>y>z"), 1)])
rho_p = profile_state([mixed_ballot([(0.01, c.parse_order("x>y>z")), (0.99, c.parse_order("y>x>z"))], 0),
                       basis_ballot(c.parse_order("x>y>z"), 1)])

print("weight-matching:", similar(rho, rho_p, 0, 1))
print("support-only   :", similar(rho, rho_p, 0, 1, definition="support"))

# %% [markdown]
# Under weight matching the IIA checker finds nothing to compare on (x, y).
# The two profiles do agree on every other pair (both voters always put z
# last), so those pairs still count.

# %%
pairs = ProfilePairs([rho, rho_p], [(0, 1), (1, 0)])
for restrict in ([(0, 1), (1, 0)], None):
    v = check_sharp_qiia(make_rule(), pairs, pairs=restrict)
    print(f"pairs={restrict}: {v.line()} applicable={v.applicable}")
