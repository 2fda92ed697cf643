# %% [markdown]
# # Reading out a societal ranking
#
# The channel's output is a state, not a ranking.  A ranking comes from
# measuring in the preference basis; the probabilities are the diagonal.

# %%
from collections import Counter
from pathlib import Path

import numpy as np

from qvote import measure_outcome, parse_scenario, qcv
from qvote.orders import order_to_index

scenario = parse_scenario((Path(__file__).parent / "scenarios" / "mixture.txt").read_text())
state = qcv(scenario.profile(), scenario.params())
rng = np.random.default_rng(scenario.seed)

shots = Counter()
for _ in range(10_000):
    order, p = measure_outcome(state, rng)
    shots[order] += 1

for order in sorted(shots, key=order_to_index):
    i = order_to_index(order)
    print(f"{scenario.candidates.format_order(order):<8} "
          f"freq={shots[order] / 10_000:.4f}  p={state.matrix[i, i].real:.4f}")
