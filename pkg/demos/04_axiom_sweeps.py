# %% [markdown]
# # Exhaustive and random axiom sweeps
#
# All 216 basis profiles for three voters and three candidates, plus random
# dephased mixtures and matched pairs.  Each line is one checker verdict.

# %%
import time

from qvote import ProfileFamily, check_dictatorship, make_rule, similar_profile_pairs
from qvote.axioms import (check_sharp_qiia, check_sharp_unanimity, check_unsharp_qiia,
                          check_unsharp_unanimity)

rule = make_rule()
basis = ProfileFamily.exhaustive(3, 3)
mixed = ProfileFamily.random(3, 3, samples=200, seed=1)
matched = similar_profile_pairs(mixed, "mixed", seed=2, count=100)

t0 = time.perf_counter()
for label, v in [
    ("basis", check_sharp_unanimity(rule, basis)),
    ("basis", check_unsharp_unanimity(rule, basis)),
    ("mixed", check_sharp_unanimity(rule, mixed)),
    ("basis pairs", check_sharp_qiia(rule, basis)),
    ("basis pairs", check_unsharp_qiia(rule, basis)),
    ("matched pairs", check_sharp_qiia(rule, matched)),
    ("basis", check_dictatorship(rule, basis)),
]:
    print(f"{label:>13}: {v.line()}  applicable={v.applicable} violations={v.violations}")
print(f"{time.perf_counter() - t0:.1f}s")

# %% [markdown]
# A mutated rule shows the checkers do find things: a rule that always
# answers I/6 never honours unanimity.

# %%
from qvote.rules import constant_mixed_rule

v = check_sharp_unanimity(constant_mixed_rule(3), basis)
print(v.line(), v.violations, v.witnesses[0])
