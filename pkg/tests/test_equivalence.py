"""Congruence basis maintenance and the four equivalence procedures."""

import json
import random
from fractions import Fraction

import pytest

from ptstrace import (CongruenceBasis, Equivalent, Inconclusive,
                      NotEquivalent, OutputKind, basis_contains,
                      basis_insert, build_rep, dirac, hk, hkc_finite,
                      hkc_inf, naive, out_term, out_total, parse_pts, step,
                      word_oracle_equiv, word_transform)

from systems import random_pts

F = Fraction


def test_basis_contains_worked_query():
    basis = CongruenceBasis(4)
    basis.insert((F(1), F(0), F(0), F(0)), (F(0), F(0), F(1), F(0)))
    basis.insert((F(0), F(1, 6), F(0), F(1, 2)), (F(0), F(0), F(1, 3), F(1, 3)))
    assert basis.rank == 2
    assert basis_contains(basis,
                          (F(0), F(1, 18), F(0), F(1, 2)),
                          (F(0), F(0), F(1, 9), F(4, 9)))


def test_empty_basis_contains_equal_vectors():
    basis = CongruenceBasis(3)
    u = (F(1, 2), F(0), F(5))
    assert basis.contains(u, u)
    assert not basis.contains(u, (F(0), F(0), F(5)))


def test_basis_rejects_non_multiple():
    basis = CongruenceBasis(2)
    basis.insert((F(1), F(0)), (F(0), F(1)))
    # 1/2 e_y - 3/4 e_z is no scalar multiple of e_y - e_z:
    # the 2x2 determinant |1 1; 1/2 -3/4| is nonzero
    assert not basis.contains((F(1, 2), F(0)), (F(0), F(3, 4)))


def test_basis_insert_single_reduction():
    basis = CongruenceBasis(4)
    changed = basis.insert((F(1), F(0), F(0), F(0)), (F(0), F(0), F(1), F(0)))
    assert changed
    assert basis.pivots == [0]
    assert basis.rows == [[F(1), F(0), F(-1), F(0)]]


def test_basis_insert_same_vector_is_noop():
    basis = CongruenceBasis(3)
    u = (F(1, 3), F(2, 3), F(0))
    assert not basis.insert(u, u)
    assert basis.rank == 0
    returned = basis_insert(basis, u, u)
    assert returned is basis and basis.rank == 0


def test_basis_two_rows_from_worked_loops():
    basis = CongruenceBasis(4)
    basis.insert((F(1), F(0), F(0), F(0)), (F(0), F(0), F(1), F(0)))
    basis.insert((F(0), F(1, 6), F(0), F(1, 2)), (F(0), F(0), F(1, 3), F(1, 3)))
    assert len(basis.rows) == 2


def test_basis_stays_in_reduced_row_echelon_form():
    rng = random.Random(61)
    for _ in range(30):
        dim = rng.randint(1, 6)
        basis = CongruenceBasis(dim)
        for _ in range(10):
            u = tuple(F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(dim))
            v = tuple(F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(dim))
            basis.insert(u, v)
            assert basis.pivots == sorted(set(basis.pivots))
            for row, pivot in zip(basis.rows, basis.pivots):
                assert row[pivot] == 1
                assert all(row[j] == 0 for j in range(pivot))
                for other, other_pivot in zip(basis.rows, basis.pivots):
                    if other_pivot != pivot:
                        assert other[pivot] == 0
            if basis.rank == dim:
                break


def test_hkc_inf_worked_run(worked_rep):
    trace = []
    result = hkc_inf(worked_rep, "x", "z", trace=trace, debug=True)
    assert result == Equivalent(iterations=3, relation_size=2)
    assert len(trace) == 3
    assert not trace[0].skipped and not trace[1].skipped and trace[2].skipped


def test_hkc_inf_two_letter_counterexample(yz_rep):
    result = hkc_inf(yz_rep, "y", "z")
    assert isinstance(result, NotEquivalent)
    assert result.witness == ("a",)
    assert result.output == OutputKind.TOTAL_MASS
    assert (result.lhs, result.rhs) == (F(1, 2), F(3, 4))


def test_hkc_inf_half_loop_single_insert(half_loop_rep):
    result = hkc_inf(half_loop_rep, "x", "y")
    assert isinstance(result, Equivalent)
    assert result.relation_size == 1


def test_hkc_finite_ignores_infinite_difference(yz_rep, worked_rep):
    assert isinstance(hkc_finite(yz_rep, "y", "z"), Equivalent)
    assert isinstance(hkc_finite(worked_rep, "x", "z"), Equivalent)


def test_hkc_finite_termination_witness():
    rep = build_rep(parse_pts(json.dumps({
        "alphabet": ["a"],
        "states": ["x", "y"],
        "transitions": {
            "x": {"stop": "1"},
            "y": {"moves": [{"letter": "a", "to": "y", "p": "1"}]},
        },
    })))
    result = hkc_finite(rep, "x", "y")
    assert isinstance(result, NotEquivalent)
    assert result.witness == ()
    assert result.output == OutputKind.TERMINATION
    assert (result.lhs, result.rhs) == (F(1), F(0))


def test_naive_half_loop_exhausts_budget(half_loop_rep):
    assert naive(half_loop_rep, "x", "y", 100) == \
        Inconclusive(steps_exhausted=100, relation_size=100)
    assert hk(half_loop_rep, "x", "y", 100) == \
        Inconclusive(steps_exhausted=100, relation_size=100)


def test_naive_on_identical_state_with_fixed_point(chain_rep):
    # x maps to itself on a, so the self pair repeats and naive closes
    # within |alphabet| + 1 extractions
    result = naive(chain_rep, "x", "x", 10)
    assert isinstance(result, Equivalent)
    assert result.iterations <= len(chain_rep.alphabet) + 1


def test_hk_closes_self_pair_by_reflexivity(chain_rep, half_loop_rep):
    for rep in (chain_rep, half_loop_rep):
        for state in rep.states:
            result = hk(rep, state, state, 10)
            assert result == Equivalent(iterations=1, relation_size=0)


def test_hk_two_letter_counterexample(yz_rep):
    result = hk(yz_rep, "y", "z", 50)
    assert isinstance(result, NotEquivalent)
    assert result.witness == ("a",)


def test_step_budget_must_be_positive(half_loop_rep):
    with pytest.raises(ValueError):
        naive(half_loop_rep, "x", "y", 0)
    with pytest.raises(ValueError):
        hk(half_loop_rep, "x", "y", -3)


def test_hkc_iteration_bound_on_random_systems():
    rng = random.Random(67)
    for _ in range(80):
        pts = random_pts(rng)
        rep = build_rep(pts)
        x, y = rng.choice(pts.states), rng.choice(pts.states)
        result = hkc_inf(rep, x, y)
        bound = 1 + len(rep.alphabet) * rep.dim
        if isinstance(result, (Equivalent, NotEquivalent)):
            assert result.iterations <= bound
            assert result.relation_size <= rep.dim
        else:
            pytest.fail("hkc_inf may not be inconclusive")


def test_hkc_agrees_with_word_oracle():
    rng = random.Random(71)
    for _ in range(80):
        pts = random_pts(rng)
        rep = build_rep(pts)
        x, y = rng.choice(pts.states), rng.choice(pts.states)
        decided = isinstance(hkc_inf(rep, x, y, debug=True), Equivalent)
        oracle = word_oracle_equiv(rep, dirac(rep, x), dirac(rep, y), rep.dim)
        assert decided == oracle


def test_counterexamples_revalidate():
    rng = random.Random(73)
    checked = 0
    for _ in range(80):
        pts = random_pts(rng, clone_prob=0.0)
        rep = build_rep(pts)
        x, y = rng.choice(pts.states), rng.choice(pts.states)
        result = hkc_inf(rep, x, y)
        if not isinstance(result, NotEquivalent):
            continue
        checked += 1
        functional = out_total if result.output == OutputKind.TOTAL_MASS else out_term
        lhs = functional(rep, word_transform(rep, dirac(rep, x), result.witness))
        rhs = functional(rep, word_transform(rep, dirac(rep, y), result.witness))
        assert (lhs, rhs) == (result.lhs, result.rhs)
        assert lhs != rhs
    assert checked >= 20


def test_full_equivalence_implies_finite_equivalence():
    rng = random.Random(79)
    for _ in range(60):
        pts = random_pts(rng)
        rep = build_rep(pts)
        x, y = rng.choice(pts.states), rng.choice(pts.states)
        if isinstance(hkc_inf(rep, x, y), Equivalent):
            assert isinstance(hkc_finite(rep, x, y), Equivalent)


def _terminations_agree(rep, u, v, depth):
    # finite-trace analogue of the word oracle: compare the termination
    # output only, on every word up to the given depth
    if out_term(rep, u) != out_term(rep, v):
        return False
    if depth == 0:
        return True
    return all(_terminations_agree(rep, step(rep, u, a), step(rep, v, a), depth - 1)
               for a in rep.alphabet)


def test_hkc_finite_agrees_with_termination_only_oracle():
    rng = random.Random(101)
    for _ in range(60):
        pts = random_pts(rng)
        rep = build_rep(pts)
        x, y = rng.choice(pts.states), rng.choice(pts.states)
        decided = isinstance(hkc_finite(rep, x, y, debug=True), Equivalent)
        oracle = _terminations_agree(rep, dirac(rep, x), dirac(rep, y), rep.dim)
        assert decided == oracle
