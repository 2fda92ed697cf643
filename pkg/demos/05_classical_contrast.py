# %% [markdown]
# # The classical shadow
#
# Drop the quantum steps and keep only Condorcet scores plus a fixed
# tie-break.  Unanimity survives, but independence of irrelevant
# alternatives breaks, exactly as Arrow's theorem says it must for a
# non-dictatorial rule.

# %%
from qvote.axioms import check_classical_axioms
from qvote.classical import condorcet_lex_swf, dictator_swf

for name, swf in [("condorcet+tiebreak", condorcet_lex_swf), ("dictator(0)", dictator_swf(0))]:
    print(name)
    for v in check_classical_axioms(swf, n=3, m=3):
        print("  ", v.line(), "violations:", v.violations)

# %% [markdown]
# One IIA witness: every voter ranks x against y the same way in both
# profiles, yet society flips.

# %%
_, iia, _ = check_classical_axioms(condorcet_lex_swf, 3, 3)
w = iia.witnesses[0]
print(f"pair {w['pair']}")
print(f"  {w['profile']}  ->  {w['social']}")
print(f"  {w['profile_prime']}  ->  {w['social_prime']}")
