"""Checkers for the quantum and classical social-choice axioms.

Every checker evaluates the rule once per profile, reduces each state to
its table of pair weights, and then scans profiles (or profile pairs) and
ordered candidate pairs.  "Equals one" is read as ``>= 1 - SHARP_TOL`` and
"positive" as ``> POSITIVE_TOL``.
"""
from dataclasses import asdict, dataclass, field
from itertools import product
from math import factorial

import numpy as np

from . import linalg
from .ballots import dephase_decompose, dim_to_m, pair_projector, reduced_ballot
from .errors import NumericError, SizeError
from .families import ProfileFamily, ProfilePairs
from .orders import CandidateSet, all_orders, ordered_pairs, ranks_above

SHARP_TOL = 1e-9
POSITIVE_TOL = 1e-12
MAX_WITNESSES = 50
MAX_CLASSICAL_PROFILES = 10**6

QUANTUM_AXIOMS = ("sharp-unanimity", "unsharp-unanimity", "sharp-qiia", "unsharp-qiia",
                  "sharp-dictatorship", "unsharp-dictatorship")
CLASSICAL_AXIOMS = ("classical-unanimity", "classical-iia", "classical-dictatorship")
AXIOMS = QUANTUM_AXIOMS + CLASSICAL_AXIOMS


@dataclass
class AxiomVerdict:
    """Outcome of one checker run.

    ``witnesses`` holds at most ``MAX_WITNESSES`` counterexample records;
    ``violations`` counts all of them.  For the dictatorship checks,
    ``holds`` means some voter has no violation (the rule behaves as a
    dictator on the family) and ``witnesses`` lists the other voters'
    first violations.
    """

    axiom: str
    holds: bool
    witnesses: list = field(default_factory=list)
    cases_checked: int = 0
    applicable: int = 0
    violations: int = 0
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)

    def status(self):
        if self.axiom.endswith("dictatorship"):
            return "NO VIOLATION FOUND" if self.holds else "VIOLATED"
        return "HOLDS" if self.holds else "FAILS"

    def line(self, label=None):
        label = (label or self.axiom).upper()
        return f"{label}: {self.status()} (cases={self.cases_checked})"


def _num(v):
    return float(f"{v:.12g}")


def describe_profile(profile, candidates=None):
    """JSON-friendly description: dephased components plus a coherence flag."""
    cands = candidates or CandidateSet.default(profile.m)
    comps = [[_num(w), " | ".join(cands.format_order(o) for o in bp.orders)]
             for w, bp in dephase_decompose(profile)]
    coherent = linalg.max_offdiagonal(profile.state.matrix) > POSITIVE_TOL
    return {"components": comps, "coherent": coherent}


def weight_table(mat, tol=SHARP_TOL):
    """``W[x, y] = Tr(Pi^{x>y} mat)`` for all ordered pairs (diagonal 0)."""
    mat = linalg.as_matrix(mat)
    m = dim_to_m(mat.shape[0])
    diag = mat.diagonal().real
    w = np.zeros((m, m))
    for x, y in ordered_pairs(m):
        w[x, y] = diag[pair_projector(x, y, m).mask].sum()
    if w.min() < -tol or w.max() > 1 + tol:
        raise NumericError(f"pair weights outside [0, 1]: [{w.min()}, {w.max()}]")
    return np.clip(w, 0.0, 1.0)


def summarize(rule, profiles):
    """Pair-weight tables of every voter's reduced ballot and of the output.

    Returns
    -------
    voters : ndarray, shape (P, n, m, m)
    output : ndarray, shape (P, m, m)
    """
    voters, output = [], []
    for rho in profiles:
        voters.append([weight_table(reduced_ballot(rho, i).state) for i in range(rho.n)])
        output.append(weight_table(rule(rho)))
    return np.array(voters), np.array(output)


def _witness(profile, cands, pair, vw, ow, **extra):
    rec = {"profile": describe_profile(profile, cands), "pair": cands.format_pair(pair),
           "voter_weights": [_num(v) for v in vw], "output_weight": _num(ow)}
    rec.update(extra)
    return rec


def _pairs(m, pairs):
    return list(pairs) if pairs is not None else ordered_pairs(m)


def _check_unanimity(rule, family, sharp, tol, pairs, max_witnesses):
    profiles = family.profiles()
    voters, output = summarize(rule, profiles)
    hit = (lambda w: w >= 1 - tol) if sharp else (lambda w: w > POSITIVE_TOL)
    witnesses, applicable, violations, cases = [], 0, 0, 0
    for p, rho in enumerate(profiles):
        for x, y in _pairs(family.m, pairs):
            cases += 1
            if not np.all(hit(voters[p, :, x, y])):
                continue
            applicable += 1
            if not hit(output[p, x, y]):
                violations += 1
                if len(witnesses) < max_witnesses:
                    witnesses.append(_witness(rho, family.candidates, (x, y),
                                              voters[p, :, x, y], output[p, x, y]))
    name = "sharp-unanimity" if sharp else "unsharp-unanimity"
    return AxiomVerdict(name, violations == 0, witnesses, cases, applicable, violations)


def check_sharp_unanimity(rule, family, tol=SHARP_TOL, pairs=None, max_witnesses=MAX_WITNESSES):
    """If every voter's reduced ballot gives x>y weight 1, so must the output."""
    return _check_unanimity(rule, family, True, tol, pairs, max_witnesses)


def check_unsharp_unanimity(rule, family, tol=SHARP_TOL, pairs=None, max_witnesses=MAX_WITNESSES):
    """If every voter gives x>y positive weight, so must the output."""
    return _check_unanimity(rule, family, False, tol, pairs, max_witnesses)


def matched_mask(va, vb, x, y, definition="corrected", tol=SHARP_TOL):
    """Which profile pairs count as similar with respect to ``(x, y)``.

    Parameters
    ----------
    va, vb : ndarray, shape (K, n, m, m)
        Voter weight tables of the first and second profile of each pair.
    definition : {"corrected", "support"}
        ``corrected`` requires equal (x, y) and (y, x) weights per voter;
        ``support`` only equal support (positive vs zero).
    """
    a = va[:, :, [x, y], [y, x]]
    b = vb[:, :, [x, y], [y, x]]
    if definition == "corrected":
        return np.all(np.abs(a - b) <= tol, axis=(1, 2))
    if definition == "support":
        return np.all((a > POSITIVE_TOL) == (b > POSITIVE_TOL), axis=(1, 2))
    raise ValueError(f"unknown similarity definition {definition!r}")


def similar(rho, rho_prime, x, y, definition="corrected", tol=SHARP_TOL):
    """Whether two profile states are similar with respect to ``(x, y)``."""
    va = np.array([[weight_table(reduced_ballot(rho, i).state) for i in range(rho.n)]])
    vb = np.array([[weight_table(reduced_ballot(rho_prime, i).state) for i in range(rho_prime.n)]])
    return bool(matched_mask(va, vb, x, y, definition, tol)[0])


def _check_qiia(rule, family_pairs, sharp, tol, pairs, definition, max_witnesses):
    if isinstance(family_pairs, ProfileFamily):
        family_pairs = ProfilePairs(family_pairs.profiles(), None, family_pairs.n,
                                    family_pairs.m, family_pairs.candidates)
    profiles = family_pairs.profiles
    voters, output = summarize(rule, profiles)
    ia, ib = family_pairs.index_arrays()
    hit = (lambda w: w >= 1 - tol) if sharp else (lambda w: w > POSITIVE_TOL)
    witnesses, applicable, violations = [], 0, 0
    cand_pairs = _pairs(family_pairs.m, pairs)
    for x, y in cand_pairs:
        match = matched_mask(voters[ia], voters[ib], x, y, definition, tol)
        applicable += int(match.sum())
        bad = match & hit(output[ia, x, y]) & ~hit(output[ib, x, y])
        violations += int(bad.sum())
        for k in np.flatnonzero(bad)[:max(0, max_witnesses - len(witnesses))]:
            a, b = int(ia[k]), int(ib[k])
            witnesses.append({
                "pair": family_pairs.candidates.format_pair((x, y)),
                "profile": describe_profile(profiles[a], family_pairs.candidates),
                "profile_prime": describe_profile(profiles[b], family_pairs.candidates),
                "output_weight": _num(output[a, x, y]),
                "output_weight_prime": _num(output[b, x, y]),
            })
    name = "sharp-qiia" if sharp else "unsharp-qiia"
    cases = len(ia) * len(cand_pairs)
    return AxiomVerdict(name, violations == 0, witnesses, cases, applicable, violations,
                        {"similarity": definition})


def check_sharp_qiia(rule, family_pairs, tol=SHARP_TOL, pairs=None, definition="corrected",
                     max_witnesses=MAX_WITNESSES):
    """For similar (rho, rho'), output x>y weight 1 on rho implies 1 on rho'.

    ``family_pairs`` is a :class:`ProfilePairs` or a :class:`ProfileFamily`
    (meaning all ordered pairs of its members).
    """
    return _check_qiia(rule, family_pairs, True, tol, pairs, definition, max_witnesses)


def check_unsharp_qiia(rule, family_pairs, tol=SHARP_TOL, pairs=None, definition="corrected",
                       max_witnesses=MAX_WITNESSES):
    """For similar (rho, rho'), positive x>y output weight carries over."""
    return _check_qiia(rule, family_pairs, False, tol, pairs, definition, max_witnesses)


def check_dictatorship(rule, family, kind="both", tol=SHARP_TOL, pairs=None):
    """Look for a voter whose ballot the rule mirrors on every pair.

    Parameters
    ----------
    kind : {"both", "sharp", "unsharp"}
        Which mirroring conditions a dictator must meet.

    Returns
    -------
    AxiomVerdict
        ``holds`` iff some voter has no violation of the selected kinds in
        the family.  A finite family can refute dictatorship but never
        certify it, so ``holds`` reads "no violation found".  Witnesses hold
        the first violation of each kind for every non-surviving voter.
    """
    if kind not in ("both", "sharp", "unsharp"):
        raise ValueError(f"unknown dictatorship kind {kind!r}")
    kinds = ("sharp", "unsharp") if kind == "both" else (kind,)
    profiles = family.profiles()
    voters, output = summarize(rule, profiles)
    tests = {"sharp": lambda w: w >= 1 - tol, "unsharp": lambda w: w > POSITIVE_TOL}
    cand_pairs = _pairs(family.m, pairs)
    counts = {}
    witnesses = []
    survivors = []
    for i in range(family.n):
        first = {}
        for kd in kinds:
            t = tests[kd]
            counts[(i, kd)] = 0
            for p, rho in enumerate(profiles):
                for x, y in cand_pairs:
                    vi, out = voters[p, i, x, y], output[p, x, y]
                    if t(vi) != t(out):
                        counts[(i, kd)] += 1
                        if kd not in first:
                            first[kd] = _witness(rho, family.candidates, (x, y), [vi], out,
                                                 voter=i, kind=kd)
        if not first:
            survivors.append(i)
        witnesses.extend(first[kd] for kd in kinds if kd in first)
    name = {"both": "quantum-dictatorship", "sharp": "sharp-dictatorship",
            "unsharp": "unsharp-dictatorship"}[kind]
    details = {
        "dictator": survivors[0] if survivors else None,
        "violations_per_voter": {f"{i}:{kd}": c for (i, kd), c in sorted(counts.items())},
        "every_voter_violates": not survivors
        and all(counts[(i, kd)] > 0 for i in range(family.n) for kd in kinds),
    }
    cases = len(profiles) * len(cand_pairs) * family.n * len(kinds)
    return AxiomVerdict(name, bool(survivors), witnesses, cases, cases,
                        sum(counts.values()), details)


def check_classical_axioms(swf, n, m, max_witnesses=MAX_WITNESSES, candidates=None):
    """Exhaustively check the three classical Arrow axioms for an SWF.

    IIA is checked over all ordered profile pairs by grouping profiles on
    their per-voter (x, y) directions: two profiles in the same group must
    agree on the social x-versus-y direction.

    Returns
    -------
    list of AxiomVerdict
        ``[classical-unanimity, classical-iia, classical-dictatorship]``.
    """
    total = factorial(m) ** n
    if total > MAX_CLASSICAL_PROFILES:
        raise SizeError(f"{total} profiles exceed {MAX_CLASSICAL_PROFILES}")
    cands = candidates or CandidateSet.default(m)
    fmt = lambda prof: " | ".join(cands.format_order(o) for o in prof)
    profiles = list(product(all_orders(m), repeat=n))
    results = [tuple(swf(p)) for p in profiles]
    pairs = ordered_pairs(m)

    wit, viol, applicable = [], 0, 0
    for prof, res in zip(profiles, results):
        for x, y in pairs:
            if all(ranks_above(o, x, y) for o in prof):
                applicable += 1
                if not ranks_above(res, x, y):
                    viol += 1
                    if len(wit) < max_witnesses:
                        wit.append({"profile": fmt(prof), "pair": cands.format_pair((x, y)),
                                    "social": cands.format_order(res)})
    unanimity = AxiomVerdict("classical-unanimity", viol == 0, wit,
                             total * len(pairs), applicable, viol)

    wit, viol, applicable = [], 0, 0
    for x, y in pairs:
        groups = {}
        for k, prof in enumerate(profiles):
            key = tuple(ranks_above(o, x, y) for o in prof)
            groups.setdefault(key, []).append(k)
        for members in groups.values():
            applicable += len(members) ** 2
            up = [k for k in members if ranks_above(results[k], x, y)]
            down = [k for k in members if not ranks_above(results[k], x, y)]
            viol += 2 * len(up) * len(down)
            if up and down and len(wit) < max_witnesses:
                a, b = up[0], down[0]
                wit.append({"pair": cands.format_pair((x, y)),
                            "profile": fmt(profiles[a]), "social": cands.format_order(results[a]),
                            "profile_prime": fmt(profiles[b]),
                            "social_prime": cands.format_order(results[b])})
    iia = AxiomVerdict("classical-iia", viol == 0, wit, total * total * len(pairs),
                       applicable, viol)

    wit, survivors, viol = [], [], 0
    for i in range(n):
        bad = [k for k, prof in enumerate(profiles) if results[k] != prof[i]]
        viol += len(bad)
        if bad:
            k = bad[0]
            wit.append({"voter": i, "profile": fmt(profiles[k]),
                        "social": cands.format_order(results[k])})
        else:
            survivors.append(i)
    dictatorship = AxiomVerdict("classical-dictatorship", bool(survivors), wit, total * n,
                                total * n, viol,
                                {"dictator": survivors[0] if survivors else None})
    return [unanimity, iia, dictatorship]
