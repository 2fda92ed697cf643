"""Scenario files and single-scenario reports.

A scenario is line-oriented ``key: value`` text::

    # Condorcet cycle
    candidates: x,y,z
    ballot: x>y>z
    ballot: y>z>x
    ballot: 0.5 z>x>y + 0.5 z>y>x
    delta: 0.05
    checks: sharp-unanimity,unsharp-qiia
    seed: 42

One ``ballot`` line per voter; ``voters`` and ``tolerance`` are optional.
"""
import json
from dataclasses import dataclass, field

import numpy as np

from . import axioms
from .ballots import mixed_ballot, pair_weight_table, profile_state
from .classical import condorcet_lex_swf
from .errors import QVoteError, ScenarioError
from .families import ProfileFamily, similar_profile_pairs
from .linalg import VALIDATION_TOL
from .orders import CandidateSet, order_to_index
from .qcv import DEFAULT_DELTA, QcvParams, make_rule, measure_outcome, qcv, qcv_components

KEYS = ("candidates", "voters", "ballot", "delta", "checks", "seed", "tolerance")
CHECK_NAMES = axioms.AXIOMS
# checks whose failure makes the CLI exit with status 1
MUST_HOLD = ("sharp-unanimity", "unsharp-unanimity", "sharp-qiia", "unsharp-qiia",
             "classical-unanimity")
MATCHED_PER_PAIR = 10


@dataclass
class Scenario:
    """Parsed scenario.  Each ballot is a list of ``(weight, order)``."""

    candidates: CandidateSet
    ballots: list
    delta: float = DEFAULT_DELTA
    checks: list = field(default_factory=list)
    seed: int = 42
    tolerance: float = VALIDATION_TOL

    @property
    def voters(self):
        return len(self.ballots)

    @property
    def m(self):
        return self.candidates.m

    def params(self):
        return QcvParams(self.delta, self.tolerance)

    def profile(self):
        return profile_state(mixed_ballot(b, owner=i, tol=self.tolerance)
                             for i, b in enumerate(self.ballots))


def _parse_ballot(text, cands, lineno):
    comps = []
    for term in text.split("+"):
        parts = term.split()
        if len(parts) == 1:
            w, order_text = 1.0, parts[0]
        elif len(parts) == 2:
            try:
                w = float(parts[0])
            except ValueError:
                raise ScenarioError(f"bad weight {parts[0]!r}", lineno, "ballot") from None
            order_text = parts[1]
        else:
            raise ScenarioError(f"cannot parse ballot term {term.strip()!r}", lineno, "ballot")
        try:
            order = cands.parse_order(order_text)
        except ValueError as e:
            raise ScenarioError(str(e), lineno, "ballot") from None
        if not np.isfinite(w) or w <= 0:
            raise ScenarioError(f"mixture weight {w} must be positive", lineno, "ballot")
        comps.append((w, order))
    total = sum(w for w, _ in comps)
    if abs(total - 1) > 1e-9:
        raise ScenarioError(f"mixture weights sum to {total!r}, not 1", lineno,
                            "ballot weights sum to 1")
    return comps


def parse_scenario(text):
    """Parse and validate scenario text.

    Raises
    ------
    ScenarioError
        With the offending line and field, or the violated constraint.
    """
    fields = {}
    ballot_lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ScenarioError(f"expected 'key: value', got {line!r}", lineno)
        key, value = (s.strip() for s in line.split(":", 1))
        if key not in KEYS:
            raise ScenarioError(f"unknown key {key!r}", lineno, key)
        if key == "ballot":
            ballot_lines.append((lineno, value))
        elif key in fields:
            raise ScenarioError("duplicate key", lineno, key)
        else:
            fields[key] = (lineno, value)

    if "candidates" not in fields:
        raise ScenarioError("missing candidates line", field="candidates")
    lineno, value = fields["candidates"]
    try:
        cands = CandidateSet(tuple(s.strip() for s in value.split(",")))
    except ValueError as e:
        raise ScenarioError(str(e), lineno, "candidates") from None

    ballots = [_parse_ballot(v, cands, ln) for ln, v in ballot_lines]
    if len(ballots) < 2:
        raise ScenarioError(f"need at least 2 ballot lines, got {len(ballots)}", field="ballot")

    def get(key, conv, default):
        if key not in fields:
            return default
        ln, v = fields[key]
        try:
            return conv(v)
        except ValueError:
            raise ScenarioError(f"cannot parse {v!r}", ln, key) from None

    voters = get("voters", int, len(ballots))
    if voters != len(ballots):
        raise ScenarioError(f"voters: {voters} but {len(ballots)} ballot lines",
                            fields["voters"][0], "voters")
    delta = get("delta", float, DEFAULT_DELTA)
    if not 0 < delta < 1 / cands.m**2:
        raise ScenarioError(f"delta {delta} outside (0, 1/m^2 = {1 / cands.m**2:.6g})",
                            fields.get("delta", (None,))[0], "delta < 1/m^2")
    seed = get("seed", int, 42)
    if seed < 0:
        raise ScenarioError("seed must be non-negative", fields["seed"][0], "seed")
    tolerance = get("tolerance", float, VALIDATION_TOL)
    if not tolerance > 0:
        raise ScenarioError("tolerance must be positive", fields["tolerance"][0], "tolerance")
    checks = []
    if "checks" in fields:
        ln, v = fields["checks"]
        checks = [c.strip() for c in v.split(",") if c.strip()]
        for c in checks:
            if c not in CHECK_NAMES:
                raise ScenarioError(f"unknown check {c!r}", ln, "checks")
    return Scenario(cands, ballots, delta, checks, seed, tolerance)


def serialize_scenario(s):
    """Canonical text form; ``parse_scenario`` inverts it."""
    lines = [f"candidates: {','.join(s.candidates.labels)}", f"voters: {s.voters}"]
    for b in s.ballots:
        if len(b) == 1 and b[0][0] == 1.0:
            lines.append(f"ballot: {s.candidates.format_order(b[0][1])}")
        else:
            terms = [f"{w!r} {s.candidates.format_order(o)}" for w, o in b]
            lines.append("ballot: " + " + ".join(terms))
    lines.append(f"delta: {s.delta!r}")
    if s.checks:
        lines.append(f"checks: {','.join(s.checks)}")
    lines.append(f"seed: {s.seed}")
    lines.append(f"tolerance: {s.tolerance!r}")
    return "\n".join(lines) + "\n"


def run_check(name, rule, profile, scenario, rng_seed):
    """Run one named axiom check on the scenario's profile."""
    cands = scenario.candidates
    n, m = scenario.voters, scenario.m
    family = ProfileFamily.of([profile], candidates=cands)
    if name in ("sharp-unanimity", "unsharp-unanimity"):
        fn = axioms.check_sharp_unanimity if name.startswith("sharp") else axioms.check_unsharp_unanimity
        return fn(rule, family, tol=scenario.tolerance)
    if name in ("sharp-qiia", "unsharp-qiia"):
        pairs = similar_profile_pairs(family, "mixed", seed=rng_seed,
                                      count=MATCHED_PER_PAIR * m * (m - 1))
        fn = axioms.check_sharp_qiia if name.startswith("sharp") else axioms.check_unsharp_qiia
        return fn(rule, pairs, tol=scenario.tolerance)
    if name in ("sharp-dictatorship", "unsharp-dictatorship"):
        return axioms.check_dictatorship(rule, family, kind=name.split("-")[0],
                                         tol=scenario.tolerance)
    verdicts = axioms.check_classical_axioms(condorcet_lex_swf, n, m, candidates=cands)
    return {v.axiom: v for v in verdicts}[name]


@dataclass
class Report:
    """Everything produced for one scenario."""

    scenario: Scenario
    weights: dict
    components: list
    verdicts: list = field(default_factory=list)
    samples: dict = None
    shots: int = 0

    def failed(self):
        """Checks expected to hold that produced witnesses."""
        return [v for v in self.verdicts if v.axiom in MUST_HOLD and not v.holds]

    def to_dict(self):
        c = self.scenario.candidates
        return {
            "scenario": {
                "candidates": list(c.labels),
                "voters": self.scenario.voters,
                "ballots": [[[w, c.format_order(o)] for w, o in b] for b in self.scenario.ballots],
                "delta": self.scenario.delta,
                "checks": list(self.scenario.checks),
                "seed": self.scenario.seed,
                "tolerance": self.scenario.tolerance,
            },
            "pair_weights": {c.format_pair(p): float(f"{w:.12g}")
                             for p, w in sorted(self.weights.items())},
            "qcv_trace": [_trace_dict(w, bp, tr, c) for w, bp, tr in self.components],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "samples": self.samples,
        }

    def render_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def render_text(self):
        c = self.scenario.candidates
        out = ["qvote report", "scenario:"]
        out += ["  " + line for line in serialize_scenario(self.scenario).splitlines()]
        out.append("pair weights Tr(Pi^{x>y} E(rho)):")
        for p, w in sorted(self.weights.items()):
            out.append(f"  {c.format_pair(p):<12} {w:.12g}")
        out.append(f"qcv trace ({len(self.components)} basis component(s)):")
        for k, (w, bp, tr) in enumerate(self.components, 1):
            d = _trace_dict(w, bp, tr, c)
            out.append(f"  component {k}: weight {d['weight']:.12g}: {d['profile']}")
            out.append("    scores: " + " ".join(f"{a}={s}" for a, s in d["scores"].items()))
            out.append("    weak order: " + " > ".join("{" + ",".join(g) + "}" for g in d["weak_order"]))
            out.append(f"    extensions: {d['extension_count']}")
            out.append("    minority pairs: " + (",".join(d["minority_pairs"]) or "-"))
            out.append("    unanimous pairs: " + (",".join(d["unanimous_pairs"]) or "-"))
            out.append(f"    renormalization factor: {d['renormalization_factor']:.12g}")
        if self.verdicts:
            out.append("verdicts:")
            for v in self.verdicts:
                out.append("  " + v.line())
                for wit in v.witnesses[:3]:
                    out.append("    witness: " + json.dumps(wit, sort_keys=True))
        if self.samples is not None:
            out.append(f"samples ({self.shots} shots, seed {self.scenario.seed}):")
            for order, rec in self.samples.items():
                out.append(f"  {order:<12} {rec['count']:>8}  p={rec['probability']:.12g}")
        return "\n".join(out) + "\n"


def _trace_dict(w, bp, tr, c):
    return {
        "weight": float(f"{w:.12g}"),
        "profile": " | ".join(c.format_order(o) for o in bp.orders),
        "scores": {c.labels[k]: s for k, s in sorted(tr.scores.items())},
        "weak_order": [[c.labels[k] for k in sorted(g)] for g in tr.weak_order],
        "extension_count": len(tr.extensions),
        "minority_pairs": [c.format_pair(p) for p in tr.minority_pairs],
        "unanimous_pairs": [c.format_pair(p) for p in tr.unanimous_pairs],
        "renormalization_factor": float(f"{tr.renormalization_factor:.12g}"),
    }


def run_scenario(s, checks=None, shots=0):
    """Evaluate the channel on a scenario and run the requested checks.

    Parameters
    ----------
    s : Scenario
    checks : list of str, optional
        Overrides ``s.checks``.
    shots : int
        Number of preference-basis measurements to sample.
    """
    params = s.params()
    try:
        params.check(s.m)
    except QVoteError as e:
        raise ScenarioError(str(e), field="delta < 1/m^2") from None
    profile = s.profile()
    out = qcv(profile, params)
    report = Report(s, pair_weight_table(out), qcv_components(profile, params))
    check_seed, sample_seed = np.random.SeedSequence(s.seed).spawn(2)
    rule = make_rule(params)
    names = s.checks if checks is None else checks
    for name in names:
        if name not in CHECK_NAMES:
            raise ScenarioError(f"unknown check {name!r}", field="checks")
    for name, sub in zip(names, check_seed.spawn(len(names))):
        report.verdicts.append(run_check(name, rule, profile, s, int(sub.generate_state(1)[0])))
    if shots:
        rng = np.random.default_rng(sample_seed)
        counts = {}
        probs = {}
        for _ in range(shots):
            order, p = measure_outcome(out, rng)
            counts[order] = counts.get(order, 0) + 1
            probs[order] = p
        report.samples = {s.candidates.format_order(o): {"count": counts[o],
                                                         "probability": float(f"{probs[o]:.12g}")}
                          for o in sorted(counts, key=order_to_index)}
        report.shots = shots
    return report
