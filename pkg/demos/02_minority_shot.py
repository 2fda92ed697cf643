# %% [markdown]
# # Minority shot and unanimity enforcement
#
# Two voters say x > y > z and one says x > z > y.  Both voters agree that
# x beats everyone, so the channel projects onto orders with x on top.  The
# y-versus-z disagreement survives as a delta-sized share of weight.

# %%
from qvote import BasisProfile, CandidateSet, QcvParams, qcv_basis

cands = CandidateSet(("x", "y", "z"))
profile = BasisProfile(tuple(cands.parse_order(s) for s in ("x>y>z", "x>y>z", "x>z>y")))

for delta in (0.01, 0.05, 0.1):
    out, tr = qcv_basis(profile, QcvParams(delta))
    d = out.diagonal()
    print(f"delta={delta:<5} |xyz>={d[0]:.6f} (closed form {(1 - 3 * delta) / (1 - 2 * delta):.6f})"
          f"  |xzy>={d[1]:.6f} (closed form {delta / (1 - 2 * delta):.6f})"
          f"  renormalized by {tr.renormalization_factor:.3f}")

# %% [markdown]
# The intermediate states show where the weight goes.  sigma1 is the single
# extension x>y>z; sigma2 spreads delta over four half-spaces; sigma3 keeps
# the two orders with x first.

# %%
out, tr = qcv_basis(profile, QcvParams(0.05))
for name in ("sigma1", "sigma2", "sigma3"):
    print(name, getattr(tr, name).diagonal().round(4))

# %% [markdown]
# delta must stay below 1/m^2; larger values are rejected.

# %%
from qvote.errors import ParameterError

try:
    qcv_basis(profile, QcvParams(0.2))
except ParameterError as e:
    print("rejected:", e)
