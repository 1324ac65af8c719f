import json

from qtorus.harness import (
    CampaignConfig,
    PairAnalysis,
    check_additivity,
    check_strict,
    check_superadditivity,
    check_upper_bound,
    diagonal_sublattice,
    gen_commutative,
    gen_independent,
    gen_random,
    gen_transpose_pair,
    run_campaign,
)
from qtorus.pairing import (
    MultiparameterMatrix,
    is_commutative,
    pairing_of,
    tensor,
)
from qtorus.solver import dimension
from qtorus.valuegroup import ValueGroup


def bq():
    g = ValueGroup(("q",), 1)
    return MultiparameterMatrix.from_upper(2, g, {(1, 2): g.generator("q")})


def sympl4():
    g = ValueGroup(("q",), 1)
    return MultiparameterMatrix.from_upper(
        4, g, {(1, 2): g.generator("q"), (3, 4): g.generator("q")}
    )


def test_gen_independent():
    assert dimension(gen_independent(1)).to_json()["lower"] == 1
    m2 = gen_independent(2)
    assert m2.value_group.free_rank == 1
    m3 = gen_independent(3)
    assert m3.value_group.free_rank == 3
    res = dimension(m3)
    assert (res.lower, res.upper) == (1, 1)


def test_gen_transpose_pair():
    lam, lam_t = gen_transpose_pair(3)
    assert lam.value_group == lam_t.value_group
    assert dimension(lam).to_json() == dimension(lam_t).to_json() | {
        "witness": dimension(lam_t).to_json()["witness"]
    }
    assert lam_t.entry(1, 2) == -lam.entry(1, 2)
    product = tensor(lam, lam_t, "shared")
    diag = diagonal_sublattice(3)
    assert diag.rank == 3
    assert is_commutative(pairing_of(product), diag)


def test_gen_random_determinism_and_invariants():
    a = gen_random(3, 2, 4, 2, seed=42)
    b = gen_random(3, 2, 4, 2, seed=42)
    assert a == b
    c = gen_random(3, 2, 4, 2, seed=43)
    assert a != c
    flat = gen_random(3, 2, 1, 0, seed=1)
    assert flat.is_commutative_matrix()


def test_superadditivity_trivial_and_transpose():
    c2, c3 = gen_commutative(2), gen_commutative(3)
    v = check_superadditivity(c2, c3)
    assert v.conclusion == "holds" and v.data["target"] == 5
    lam, lam_t = gen_transpose_pair(3)
    v = check_superadditivity(lam, lam_t)
    assert v.conclusion == "holds" and v.data["target"] == 2


def test_upper_bound_transpose_pair_attains():
    lam, lam_t = gen_transpose_pair(3)
    v = check_upper_bound(lam, lam_t)
    assert v.statement == "UpperBound"
    assert v.hypotheses_met and v.conclusion == "holds"
    assert v.data["bound"] == 3
    assert v.data["tensor"]["lower"] == 3  # equality: the bound is attained


def test_upper_bound_hypothesis_failure_weak_form():
    # ranks 2/2 with dims 2/1: the strengthened bound would be 2, the
    # product has dimension 3, and the weak bound 3 <= 3 still holds.
    v = check_upper_bound(gen_commutative(2), bq())
    assert v.statement == "WeakUpperBound"
    assert not v.hypotheses_met
    assert v.data["rhs"] == 3 and v.data["bound"] == 3
    assert v.data["tensor"] == {
        "lower": 3,
        "upper": 3,
        "exact": True,
        "witness": v.data["tensor"]["witness"],
    }
    assert v.conclusion == "holds"


def test_upper_bound_commutative_pair_weak_equality():
    v = check_upper_bound(gen_commutative(2), gen_commutative(3))
    assert v.statement == "WeakUpperBound" and v.conclusion == "holds"
    assert v.data["tensor"]["lower"] == v.data["bound"] == 5


def test_strict_gate_and_conclusion():
    v = check_strict(sympl4(), sympl4())
    assert v.hypotheses_met
    assert v.conclusion == "holds"
    assert v.data["rhs"] == 6  # 4 < 5 = rhs - 1
    gate = check_strict(gen_independent(3), sympl4())
    assert not gate.hypotheses_met and gate.conclusion == "inconclusive"


def test_additivity_cases():
    v = check_additivity(gen_commutative(2), bq())
    assert v.statement == "WeylAnalogue" and v.conclusion == "holds"
    v = check_additivity(gen_commutative(3), sympl4())
    assert v.statement == "AdditivityCodimLE1" and v.conclusion == "holds"
    v = check_additivity(sympl4(), sympl4())
    assert v.statement == "AdditivityCodim2" and v.conclusion == "holds"
    assert v.data["target"] == 4
    gate = check_additivity(gen_independent(3), gen_independent(3))
    assert not gate.hypotheses_met and gate.conclusion == "inconclusive"


def test_commutative_factor_adds_full_rank():
    # one commutative factor contributes exactly its rank
    for seed in range(12):
        other = gen_random(3, 2, 1, 2, seed=seed)
        d2 = dimension(other)
        if not d2.exact:
            continue
        for r1 in (1, 2):
            res = dimension(tensor(gen_commutative(r1), other, "shared"))
            assert res.exact and res.lower == r1 + d2.lower


def test_upper_bound_consistency_with_superadditivity():
    for seed in range(25):
        lam1 = gen_random(2, 1, 1, 2, seed=seed)
        lam2 = gen_random(3, 1, 1, 2, seed=1000 + seed)
        a = PairAnalysis(lam1, lam2)
        ub = check_upper_bound(lam1, lam2, analysis=a)
        sup = check_superadditivity(lam1, lam2, analysis=a)
        if ub.hypotheses_met and ub.conclusion == "holds":
            assert sup.conclusion == "holds"


def test_campaign_empty():
    rep = run_campaign(CampaignConfig(trials=0))
    assert rep.total_violations == 0
    assert all(sum(t.values()) == 0 for t in rep.tallies.values())


def test_campaign_deterministic_and_clean():
    cfg = CampaignConfig(trials=25, seed=11)
    r1 = run_campaign(cfg)
    r2 = run_campaign(cfg)
    assert json.dumps(r1.to_json(), sort_keys=True) == json.dumps(r2.to_json(), sort_keys=True)
    assert r1.total_violations == 0
    sup = r1.tallies["Superadditivity"]
    assert sup["holds"] + sup["violated"] + sup["inconclusive"] == 25


def test_campaign_oracle_is_exercised():
    rep = run_campaign(CampaignConfig(trials=15, seed=2))
    assert rep.oracle_checked + rep.oracle_skipped == 15
    assert rep.oracle_checked > 0
