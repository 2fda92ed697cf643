import json
from itertools import permutations

import numpy as np
import pytest

from qvote import linalg
from qvote.axioms import (check_classical_axioms, check_dictatorship, check_sharp_qiia,
                          check_sharp_unanimity, check_unsharp_qiia, check_unsharp_unanimity,
                          matched_mask, similar, summarize)
from qvote.ballots import (BasisProfile, ProfileState, basis_ballot, mixed_ballot, mixture_state,
                           pair_weight, profile_state, reduced_ballot)
from qvote.classical import condorcet_lex_swf, constant_swf, dictator_swf
from qvote.errors import SizeError
from qvote.families import ProfileFamily, ProfilePairs, cyclic_profile, similar_profile_pairs
from qvote.orders import ordered_pairs
from qvote.qcv import QcvParams, make_rule
from qvote.rules import ballot_rule, classical_rule, constant_mixed_rule, constant_order_rule

X, Y, Z = 0, 1, 2
XYZ, XZY, YXZ, YZX, ZXY, ZYX = permutations(range(3))
QCV = make_rule(QcvParams(0.05))


@pytest.fixture(scope="module")
def exhaustive():
    return ProfileFamily.exhaustive(3, 3)


@pytest.fixture(scope="module")
def exhaustive2():
    return ProfileFamily.exhaustive(2, 3)


@pytest.fixture(scope="module")
def cycle():
    return ProfileFamily.of([cyclic_profile(3, 3)])


def test_cyclic_profile_is_condorcet_cycle():
    assert cyclic_profile(3, 3).orders == (XYZ, YZX, ZXY)


def test_sharp_unanimity(exhaustive):
    v = check_sharp_unanimity(QCV, exhaustive)
    assert v.holds and v.witnesses == [] and v.cases_checked == 216 * 6
    # every unanimous (profile, pair) combination: 6 orders per pair -> 3 common orders ^ 3 voters
    assert v.applicable == 6 * 3**3
    bad = check_sharp_unanimity(constant_mixed_rule(3), exhaustive)
    assert not bad.holds and bad.violations == bad.applicable
    w = bad.witnesses[0]
    assert w["output_weight"] == 0.5 and w["voter_weights"] == [1.0, 1.0, 1.0]


def test_sharp_unanimity_random_mixed():
    v = check_sharp_unanimity(QCV, ProfileFamily.random(3, 3, 500, 42))
    assert v.holds and v.cases_checked == 3000 and v.applicable > 0


def test_unsharp_unanimity(exhaustive, cycle):
    assert check_unsharp_unanimity(QCV, exhaustive).holds
    assert check_unsharp_unanimity(QCV, cycle).holds
    bad = check_unsharp_unanimity(constant_order_rule(XYZ), exhaustive)
    assert not bad.holds
    assert any(w["pair"] in ("y>x", "z>x", "z>y") for w in bad.witnesses)


def test_unsharp_unanimity_on_mixed_full_support():
    rng = np.random.default_rng(1)
    ballots = [mixed_ballot(zip(rng.dirichlet(np.ones(6)), permutations(range(3))), i)
               for i in range(3)]
    v = check_unsharp_unanimity(QCV, ProfileFamily.of([profile_state(ballots)]))
    assert v.holds and v.applicable == 6


def test_qiia_exhaustive(exhaustive):
    for check in (check_sharp_qiia, check_unsharp_qiia):
        v = check(QCV, exhaustive)
        assert v.holds and v.cases_checked == 216**2 * 6
        # matched iff every voter has the same direction: 6 pairs * (3 * 3 * 2)^3 ordered pairs
        assert v.applicable == 6 * 216 * 27


def test_qiia_identical_pairs(exhaustive2):
    pairs = similar_profile_pairs(exhaustive2, "identical")
    v = check_sharp_qiia(QCV, pairs)
    assert v.holds and v.applicable == v.cases_checked == 36 * 6


def test_paper_similarity_example():
    rho = profile_state([mixed_ballot([(0.99, XYZ), (0.01, YXZ)], 0), basis_ballot(XYZ, 1)])
    rho_p = profile_state([mixed_ballot([(0.01, XYZ), (0.99, YXZ)], 0), basis_ballot(XYZ, 1)])
    assert not similar(rho, rho_p, X, Y)
    assert similar(rho, rho_p, X, Y, definition="support")
    pairs = ProfilePairs([rho, rho_p], [(0, 1), (1, 0)])
    for check in (check_sharp_qiia, check_unsharp_qiia):
        v = check(QCV, pairs, pairs=[(X, Y), (Y, X)])
        assert v.holds and v.applicable == 0 and v.cases_checked == 4
        bh = check(QCV, pairs, pairs=[(X, Y), (Y, X)], definition="support")
        assert bh.applicable == 4


def test_qiia_filter_matches_brute_force(exhaustive2):
    profiles = exhaustive2.profiles()[::3] + [
        mixture_state([(0.7, (XYZ, XYZ)), (0.3, (ZYX, ZYX))], 2, 3),
        mixture_state([(0.7, (XZY, XZY)), (0.3, (YZX, ZYX))], 2, 3)]
    voters, _ = summarize(QCV, profiles)
    a, b = np.divmod(np.arange(len(profiles) ** 2), len(profiles))
    for x, y in ordered_pairs(3):
        fast = matched_mask(voters[a], voters[b], x, y)
        brute = []
        for i, j in zip(a, b):
            ok = True
            for v in range(2):
                ri = reduced_ballot(profiles[i], v)
                rj = reduced_ballot(profiles[j], v)
                ok &= abs(pair_weight(ri, x, y) - pair_weight(rj, x, y)) <= 1e-9
                ok &= abs(pair_weight(ri, y, x) - pair_weight(rj, y, x)) <= 1e-9
            brute.append(ok)
        assert np.array_equal(fast, brute)


def test_similar_pair_generators(exhaustive2):
    a = BasisProfile((XYZ, XYZ)).state()
    b = BasisProfile((XZY, XZY)).state()
    assert similar(a, b, X, Y) and not similar(a, b, Y, Z)
    agreeing = similar_profile_pairs(exhaustive2, "agreeing")
    assert (0, BasisProfile((XZY, XZY)).joint_index()) in agreeing.index_pairs
    rho = mixture_state([(0.7, (XYZ, YXZ)), (0.3, (ZYX, XYZ))], 2, 3)
    rho_p = mixture_state([(0.7, (XZY, YZX)), (0.3, (YZX, ZXY))], 2, 3)
    assert similar(rho, rho_p, X, Y)
    mixed = similar_profile_pairs(exhaustive2, "mixed", seed=3, count=50)
    assert len(mixed) == 100
    hits = check_sharp_qiia(QCV, mixed)
    assert hits.holds and hits.applicable >= 100


def test_mixed_pairs_hold_for_qcv():
    fam = ProfileFamily.random(3, 3, 10, 0)
    pairs = similar_profile_pairs(fam, "mixed", seed=8, count=200)
    assert check_sharp_qiia(QCV, pairs).holds
    assert check_unsharp_qiia(QCV, pairs).holds


def test_dictatorship_cycle(cycle):
    v = check_dictatorship(QCV, cycle)
    assert not v.holds and v.details["every_voter_violates"]
    kinds = {(w["voter"], w["kind"]) for w in v.witnesses}
    assert kinds == {(i, k) for i in range(3) for k in ("sharp", "unsharp")}
    sharp0 = next(w for w in v.witnesses if w["voter"] == 0 and w["kind"] == "sharp")
    assert sharp0["pair"] == "x>y" and sharp0["output_weight"] == 0.5


def test_dictatorship_detects_dictator(exhaustive):
    v = check_dictatorship(ballot_rule(0), exhaustive)
    assert v.holds and v.details["dictator"] == 0
    assert {w["voter"] for w in v.witnesses} == {1, 2}
    assert not check_dictatorship(QCV, exhaustive).holds


def test_cases_checked_counts(exhaustive2):
    assert check_dictatorship(QCV, exhaustive2, "sharp").cases_checked == 36 * 6 * 2
    assert check_dictatorship(QCV, exhaustive2).cases_checked == 36 * 6 * 2 * 2
    assert check_unsharp_unanimity(QCV, exhaustive2, pairs=[(X, Y)]).cases_checked == 36


def test_classical_condorcet_lex():
    una, iia, dic = check_classical_axioms(condorcet_lex_swf, 3, 3)
    assert una.holds and una.cases_checked == 216 * 6
    assert not iia.holds and iia.witnesses and iia.cases_checked == 216**2 * 6
    w = iia.witnesses[0]
    assert w["social"] != w["social_prime"]
    assert not dic.holds and dic.details["dictator"] is None


def test_classical_dictator_and_constant():
    una, iia, dic = check_classical_axioms(dictator_swf(0), 3, 3)
    assert una.holds and iia.holds and dic.holds and dic.details["dictator"] == 0
    una, iia, dic = check_classical_axioms(constant_swf(XYZ), 3, 3)
    assert not una.holds and iia.holds and not dic.holds
    assert una.witnesses[0]["pair"] in ("y>x", "z>x", "z>y")


def test_classical_size_limit():
    with pytest.raises(SizeError):
        check_classical_axioms(condorcet_lex_swf, 5, 5)
    with pytest.raises(SizeError):
        ProfileFamily.exhaustive(3, 4)


def test_mutation_soundness(exhaustive):
    assert check_sharp_unanimity(constant_mixed_rule(3), exhaustive).witnesses
    assert check_unsharp_unanimity(constant_order_rule(XYZ), exhaustive).witnesses
    lifted = classical_rule(condorcet_lex_swf)
    assert check_sharp_qiia(lifted, exhaustive).witnesses
    assert check_unsharp_qiia(lifted, exhaustive).witnesses
    assert check_dictatorship(ballot_rule(0), exhaustive).witnesses


def test_determinism():
    def run():
        fam = ProfileFamily.random(3, 3, 40, 42)
        pairs = similar_profile_pairs(fam, "mixed", seed=42, count=20)
        vs = [check_sharp_unanimity(constant_mixed_rule(3), fam), check_unsharp_qiia(QCV, pairs)]
        return json.dumps([v.to_dict() for v in vs], sort_keys=True)
    assert run() == run()


def test_coherent_profile_behaves_as_its_dephasing():
    a, b = BasisProfile((XYZ, XYZ, XYZ)), BasisProfile((ZYX, ZYX, ZYX))
    psi = np.zeros(216, dtype=complex)
    psi[a.joint_index()] = psi[b.joint_index()] = 1 / np.sqrt(2)
    coherent = ProfileState(linalg.validate_density(np.outer(psi, psi.conj())), 3, 3)
    fam = ProfileFamily.of([coherent])
    assert check_unsharp_unanimity(QCV, fam).holds
    assert check_sharp_unanimity(QCV, fam).holds
    assert pair_weight(QCV(coherent), X, Y) == pytest.approx(0.5, abs=1e-12)
