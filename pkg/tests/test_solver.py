import itertools
import random

import pytest

from qtorus.harness import gen_commutative, gen_independent, gen_random, gen_transpose_pair
from qtorus.lattice import Sublattice, intmat, zeros
from qtorus.pairing import (
    MultiparameterMatrix,
    is_commutative,
    pairing_of,
    restrict_matrix,
    tensor,
)
from qtorus.solver import (
    InexactDimensionError,
    ResourceLimitError,
    SolverOptions,
    brute_force_dimension,
    codimension,
    dimension,
    free_reduction,
    single_form_dimension,
)
from qtorus.valuegroup import ValueGroup


def sympl4():
    g = ValueGroup(("q",), 1)
    return MultiparameterMatrix.from_upper(
        4, g, {(1, 2): g.generator("q"), (3, 4): g.generator("q")}
    )


def alternating(n, upper_entries):
    M = zeros(n, n)
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            M[i, j] = upper_entries[pos]
            M[j, i] = -upper_entries[pos]
            pos += 1
    return M


# ---------------------------------------------------------------------------
# free_reduction


def test_free_reduction_drops_torsion():
    g = ValueGroup((), 5)
    mat = MultiparameterMatrix.from_upper(3, g, {(1, 2): g.element((), 3)})
    assert free_reduction(pairing_of(mat)) == []
    assert dimension(mat).to_json()["lower"] == 3


def test_free_reduction_keeps_free_forms():
    mat = gen_independent(2)
    forms = free_reduction(pairing_of(mat))
    assert len(forms) == 1
    assert forms[0].tolist() == [[0, 1], [-1, 0]]
    g = ValueGroup(("q",), 2)
    mixed = MultiparameterMatrix.from_upper(2, g, {(1, 2): g.element((1,), 1)})
    forms = free_reduction(pairing_of(mixed))
    assert len(forms) == 1


# ---------------------------------------------------------------------------
# single-form closed formula


def test_single_form_examples():
    v, w = single_form_dimension(zeros(3, 3))
    assert v == 3 and w == Sublattice.full(3)
    v, w = single_form_dimension(intmat([[0, 1], [-1, 0]]))
    assert v == 1 and w.rank == 1
    v, w = single_form_dimension(
        intmat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
    )
    assert v == 2 and w.rank == 2


def form_matrix(n, M):
    """Wrap one alternating form as a single-generator instance."""
    g = ValueGroup(("q",), 1)
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            if M[i, j]:
                upper[(i + 1, j + 1)] = g.element((int(M[i, j]),))
    return MultiparameterMatrix.from_upper(n, g, upper)


@pytest.mark.parametrize("n", [2, 3])
def test_single_form_agrees_with_oracle_exhaustively(n):
    count = n * (n - 1) // 2
    for entries in itertools.product(range(-2, 3), repeat=count):
        M = alternating(n, entries)
        value, witness = single_form_dimension(M)
        mat = form_matrix(n, M)
        assert is_commutative(pairing_of(mat), witness)
        assert brute_force_dimension(mat, 2) == value


# ---------------------------------------------------------------------------
# dimension


def test_dimension_commutative():
    res = dimension(gen_commutative(4))
    assert (res.lower, res.upper, res.exact) == (4, 4, True)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dimension_independent_parameters(n):
    res = dimension(gen_independent(n))
    assert (res.lower, res.upper, res.exact) == (1, 1, True)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dimension_transpose_tensor(n):
    lam, lam_t = gen_transpose_pair(n)
    res = dimension(tensor(lam, lam_t, "shared"))
    assert (res.lower, res.upper, res.exact) == (n, n, True)


def test_dimension_two_elementary_forms():
    # lambda_12 and lambda_23 independent, lambda_13 = 1: the pair (e1, e3)
    # commutes under both forms, and a pencil combination certifies <= 2.
    g = ValueGroup(("q1", "q2"), 1)
    mat = MultiparameterMatrix.from_upper(
        3, g, {(1, 2): g.generator("q1"), (2, 3): g.generator("q2")}
    )
    res = dimension(mat)
    assert (res.lower, res.upper, res.exact) == (2, 2, True)
    assert brute_force_dimension(mat, 2) == 2


def test_dimension_witness_contract():
    for seed in range(40):
        mat = gen_random(random.Random(seed).randint(1, 4), 2, 1, 2, seed=seed)
        res = dimension(mat)
        assert 1 <= res.lower <= res.upper <= mat.rank
        assert res.exact == (res.lower == res.upper)
        assert res.witness.rank == res.lower
        assert is_commutative(pairing_of(mat), res.witness)


def test_dimension_witness_commutative_with_torsion():
    mat = gen_random(3, 1, 4, 2, seed=12)
    res = dimension(mat)
    assert is_commutative(pairing_of(mat), res.witness)


def test_dimension_deterministic():
    mat = gen_random(4, 2, 1, 2, seed=3)
    a = dimension(mat, SolverOptions(seed=5)).to_json()
    b = dimension(mat, SolverOptions(seed=5)).to_json()
    assert a == b


def test_dimension_budget_exhaustion_degrades_to_interval():
    lam, lam_t = gen_transpose_pair(3)
    res = dimension(tensor(lam, lam_t, "shared"), SolverOptions(time_budget=0.0))
    assert not res.exact
    assert res.lower <= 3 <= res.upper


def test_oracle_agreement_on_random_instances():
    rng = random.Random(0)
    exact_hits = 0
    for trial in range(60):
        n = rng.randint(1, 3)
        k = rng.randint(0, 2)
        mat = gen_random(n, k, 1, 2, seed=trial)
        res = dimension(mat)
        oracle = brute_force_dimension(mat, 2)
        assert res.lower <= oracle <= res.upper
        if res.exact:
            assert oracle == res.lower
            exact_hits += 1
    assert exact_hits >= 54  # the small population is almost always exact


def test_dimension_invariant_under_finite_index():
    rng = random.Random(2)
    for trial in range(30):
        n = rng.randint(1, 3)
        mat = gen_random(n, rng.randint(0, 2), 1, 2, seed=100 + trial)
        base = dimension(mat)
        if not base.exact:
            continue
        rows = zeros(n, n)
        for i in range(n):
            rows[i, i] = rng.randint(1, 3)
            for j in range(i + 1, n):
                rows[i, j] = rng.randint(-2, 2)
        sub = Sublattice.span(n, rows)
        res = dimension(restrict_matrix(mat, sub))
        if res.exact:
            assert res.lower == base.lower


# ---------------------------------------------------------------------------
# brute force oracle


def test_brute_examples():
    assert brute_force_dimension(gen_commutative(2)) == 2
    g = ValueGroup(("q",), 1)
    bq = MultiparameterMatrix.from_upper(2, g, {(1, 2): g.generator("q")})
    assert brute_force_dimension(bq) == 1
    assert brute_force_dimension(gen_independent(3)) == 1


def test_brute_resource_refusal():
    with pytest.raises(ResourceLimitError):
        brute_force_dimension(gen_commutative(7))
    with pytest.raises(ResourceLimitError):
        brute_force_dimension(gen_commutative(2), entry_bound=4)
    with pytest.raises(ResourceLimitError):
        brute_force_dimension(gen_independent(4), node_limit=1)


# ---------------------------------------------------------------------------
# codimension


def test_codimension_examples():
    assert codimension(gen_commutative(3)) == 0
    assert codimension(sympl4()) == 2
    assert codimension(gen_independent(3)) == 2


def test_codimension_refuses_inexact():
    lam, lam_t = gen_transpose_pair(3)
    with pytest.raises(InexactDimensionError):
        codimension(tensor(lam, lam_t, "shared"), SolverOptions(time_budget=0.0))


# ---------------------------------------------------------------------------
# acceptance-adjacent structure


def test_symplectic_pair_exact_in_both_modes():
    lam = sympl4()
    for mode in ("shared", "disjoint"):
        res = dimension(tensor(lam, lam, mode))
        assert (res.lower, res.upper, res.exact) == (4, 4, True)


def test_weyl_chain():
    def rank2(name):
        g = ValueGroup((name,), 1)
        return MultiparameterMatrix.from_upper(2, g, {(1, 2): g.generator(name)})

    chain = tensor(tensor(rank2("q1"), rank2("q2"), "disjoint"), rank2("q3"), "disjoint")
    res = dimension(chain)
    assert (res.lower, res.upper, res.exact) == (3, 3, True)
