"""Re-run every theorem of the quantum Arrow counterexample as a batch.

The four unanimity and IIA verdicts must hold on every family.  The two
dictatorship verdicts must be violated by every voter on some family.
Output labels number the verdicts ``THEOREM-2`` through ``THEOREM-7``.
The corollary is reproduced iff all six come out as expected.
"""
import json
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from . import axioms
from .ballots import basis_ballot, pair_weight
from .families import MAX_EXHAUSTIVE, ProfileFamily, cyclic_profile, similar_profile_pairs
from .linalg import as_matrix
from .qcv import DEFAULT_DELTA, QcvParams, make_rule

CYCLE_TOL = 1e-12
WEIGHT_TOL = 1e-9


@dataclass
class TheoremResult:
    label: str
    claim: str
    expect_violation: bool
    runs: list = field(default_factory=list)   # (family label, AxiomVerdict)
    extra: list = field(default_factory=list)  # (description, passed)

    @property
    def cases(self):
        return sum(v.cases_checked for _, v in self.runs)

    @property
    def ok(self):
        if not all(passed for _, passed in self.extra):
            return False
        if self.expect_violation:
            return any(not v.holds and v.details.get("every_voter_violates") for _, v in self.runs)
        return bool(self.runs) and all(v.holds for _, v in self.runs)

    def status(self):
        if self.expect_violation:
            return "VIOLATION WITNESSED" if self.ok else "NO VIOLATION WITNESSED"
        return "HOLDS" if self.ok else "FAILS"


@dataclass
class ReproduceBundle:
    m: int
    n_max: int
    delta: float
    seed: int
    theorems: list

    @property
    def reproduced(self):
        return all(t.ok for t in self.theorems)

    def render_text(self):
        out = [f"qvote reproduce: m={self.m} n_max={self.n_max} delta={self.delta!r} seed={self.seed}"]
        for t in self.theorems:
            out.append(f"{t.label}: {t.status()} (cases={t.cases})  [{t.claim}]")
            for fam, v in t.runs:
                out.append(f"  {fam}: {v.line()} applicable={v.applicable} violations={v.violations}")
            for desc, passed in t.extra:
                out.append(f"  {desc}: {'PASS' if passed else 'FAIL'}")
        out.append("Corollary: " + ("reproduced" if self.reproduced else "not reproduced"))
        return "\n".join(out) + "\n"

    def to_dict(self):
        return {
            "m": self.m, "n_max": self.n_max, "delta": self.delta, "seed": self.seed,
            "theorems": [{
                "label": t.label, "claim": t.claim, "status": t.status(), "cases": t.cases,
                "runs": [{"family": fam, "verdict": v.to_dict()} for fam, v in t.runs],
                "extra": [{"check": d, "passed": p} for d, p in t.extra],
            } for t in self.theorems],
            "corollary": "reproduced" if self.reproduced else "not reproduced",
        }

    def render_json(self):
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _cycle_checks(rule):
    """Exact shape of the output on the three-voter Condorcet cycle."""
    bp = cyclic_profile(3, 3)
    out = as_matrix(rule(bp.state()))
    uniform = np.abs(out - np.eye(6) / 6).max() <= CYCLE_TOL
    sharp, unsharp = True, True
    # voter i ranks (x,y), (y,z), (z,x) first; the opposite pair has weight 0 for voter i+1
    for i, (a, b) in enumerate([(0, 1), (1, 2), (2, 0)]):
        w = pair_weight(out, a, b)
        sharp &= abs(w - 0.5) <= WEIGHT_TOL and w < 1 - axioms.SHARP_TOL
        sharp &= pair_weight(_ballot(bp, i), a, b) == 1.0
    for i, (a, b) in enumerate([(2, 0), (0, 1), (1, 2)]):
        w = pair_weight(out, a, b)
        unsharp &= abs(w - 0.5) <= WEIGHT_TOL and w > axioms.POSITIVE_TOL
        unsharp &= pair_weight(_ballot(bp, i), a, b) <= axioms.POSITIVE_TOL
    return bool(uniform), bool(sharp), bool(unsharp)


def _ballot(bp, i):
    return basis_ballot(bp.orders[i]).state


def reproduce_theorems(n_max=3, m=3, delta=DEFAULT_DELTA, seed=42, rule=None,
                       random_profiles=500, matched_pairs=200):
    """Run all six verdicts for every voter count ``2 .. n_max``.

    Parameters
    ----------
    rule : callable, optional
        Rule to test instead of the Condorcet channel (used to confirm that
        a broken rule is not reported as reproducing the corollary).
    random_profiles, matched_pairs : int
        Sizes of the random mixed family and of the constructed QIIA pairs.

    Returns
    -------
    ReproduceBundle
    """
    params = QcvParams(delta)
    params.check(m)
    rule = rule or make_rule(params)
    t = {k: TheoremResult(f"THEOREM-{k}", claim, k >= 6) for k, claim in [
        (2, "sharp unanimity"), (3, "unsharp unanimity"), (4, "sharp QIIA"),
        (5, "unsharp QIIA"), (6, "not sharp dictatorship"), (7, "not unsharp dictatorship")]}
    seeds = np.random.SeedSequence(seed).spawn(n_max + 1)
    for n in range(2, n_max + 1):
        rnd_seed, pair_seed = (int(s.generate_state(1)[0]) for s in seeds[n].spawn(2))
        exhaustive = None
        if factorial(m) ** n <= MAX_EXHAUSTIVE:
            exhaustive = ProfileFamily.exhaustive(n, m)
        rnd = ProfileFamily.random(n, m, random_profiles, rnd_seed)
        mixed = similar_profile_pairs(rnd if exhaustive is None else exhaustive, "mixed", seed=pair_seed, count=matched_pairs)
        cycle = ProfileFamily.of([cyclic_profile(n, m)])
        if exhaustive is not None:
            t[2].runs.append((f"n={n} exhaustive-basis", axioms.check_sharp_unanimity(rule, exhaustive)))
            t[3].runs.append((f"n={n} exhaustive-basis", axioms.check_unsharp_unanimity(rule, exhaustive)))
            t[4].runs.append((f"n={n} basis pairs", axioms.check_sharp_qiia(rule, exhaustive)))
            t[5].runs.append((f"n={n} basis pairs", axioms.check_unsharp_qiia(rule, exhaustive)))
        t[2].runs.append((f"n={n} random-mixed", axioms.check_sharp_unanimity(rule, rnd)))
        t[3].runs.append((f"n={n} random-mixed", axioms.check_unsharp_unanimity(rule, rnd)))
        t[4].runs.append((f"n={n} matched mixed pairs", axioms.check_sharp_qiia(rule, mixed)))
        t[5].runs.append((f"n={n} matched mixed pairs", axioms.check_unsharp_qiia(rule, mixed)))
        t[6].runs.append((f"n={n} cyclic profile", axioms.check_dictatorship(rule, cycle, "sharp")))
        t[7].runs.append((f"n={n} cyclic profile", axioms.check_dictatorship(rule, cycle, "unsharp")))
        if exhaustive is not None:
            t[6].runs.append((f"n={n} exhaustive-basis", axioms.check_dictatorship(rule, exhaustive, "sharp")))
            t[7].runs.append((f"n={n} exhaustive-basis", axioms.check_dictatorship(rule, exhaustive, "unsharp")))
    if m == 3 and n_max >= 3:
        uniform, sharp, unsharp = _cycle_checks(rule)
        t[6].extra += [("cycle output equals I/6", uniform),
                       ("cycle x>y, y>z, z>x weights 0.5 < 1 with ballot weight 1", sharp)]
        t[7].extra += [("cycle output equals I/6", uniform),
                       ("cycle z>x, x>y, y>z weights 0.5 > 0 with ballot weight 0", unsharp)]
    return ReproduceBundle(m, n_max, delta, seed, [t[k] for k in sorted(t)])
