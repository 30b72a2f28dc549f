import random

import pytest

from intasim.asimulation import (
    FULL,
    LITERAL,
    AsimRelation,
    AsimulationError,
    MalformedRelationError,
    PairState,
    QuotientRelation,
    QuotientState,
    bounded_tuple_oracle,
    check_asimulation_quotient,
    check_k_asimulation,
    greatest_fixpoint,
    is_asimulation_quotient,
    is_k_asimulation,
    k_asimulation_fixpoint,
    lift_to_k,
    max_asimulation_quotient,
    max_k_asimulation,
    naive_greatest_fixpoint,
    replay,
)
from intasim.formulas import parse_fo, parse_int
from intasim.semantics import EvalPoint, FoModel, satisfies_at
from intasim.toolkit import GenConfig, SuiteReport, compare_quotient_with_oracle, gen_fo_model, _names, m_minus, n_plus
from intasim.translation import standard_translation


def reflexive_world(e_loop=False, with_object=False):
    rel = {"R": [("w", "w")], "P'": [("w",)]}
    if with_object:
        rel = {"R": [("w", "w")], "E": [("w", "d")], "P'": [("w", "d")]}
        return FoModel.build(["w", "d"], rel, {"P'": 2})
    if e_loop:
        rel["E"] = [("w", "w")]
    return FoModel.build(["w"], rel, {"P'": 1})


def fixture_points():
    return EvalPoint(m_minus(), "a"), EvalPoint(n_plus(), "c")


def test_fixture_seed_alone_is_a_k_asimulation():
    p, q = fixture_points()
    seed = PairState("M", 0, "a", (), "c", ())
    for k in range(4):
        assert is_k_asimulation(AsimRelation(p, q, frozenset({seed}), k))


def test_bare_seed_misses_the_r_step():
    W = reflexive_world()
    p = q = EvalPoint(W, "w")
    rel = AsimRelation(p, q, frozenset({PairState("M", 0, "w", (), "w", ())}), 1)
    report = check_k_asimulation(rel)
    assert report.condition == "R-step"
    assert replay(report, rel)


def test_missing_seed_is_reported():
    p, q = fixture_points()
    report = check_k_asimulation(AsimRelation(p, q, frozenset(), 1))
    assert report.condition == "seed"


def test_malformed_state_raises():
    p, q = fixture_points()
    bad = PairState("M", 0, "zz", (), "c", ())
    with pytest.raises(MalformedRelationError):
        check_k_asimulation(AsimRelation(p, q, frozenset({bad}), 1))


def test_identity_contains_the_diagonal():
    W = reflexive_world(with_object=True)
    p = q = EvalPoint(W, "w")
    for k in range(3):
        rel = max_k_asimulation(p, q, k, FULL)
        assert rel is not None and is_k_asimulation(rel)
        diagonal = {s for s in rel.states if s.left_world == s.right_world and s.left_objects == s.right_objects}
        assert PairState("M", 0, "w", (), "w", ()) in diagonal
        if k >= 1:
            assert PairState("M", 0, "w", ("d",), "w", ("d",)) in diagonal
            assert PairState("N", 1, "w", (), "w", ()) in diagonal


def test_orientation_asymmetry():
    p, q = fixture_points()
    assert max_k_asimulation(p, q, 1) is not None
    assert max_k_asimulation(q, p, 0) is None
    assert max_asimulation_quotient(p, q) is not None
    assert max_asimulation_quotient(q, p) is None


def test_tuples_of_different_length_are_rejected():
    W = reflexive_world(with_object=True)
    with pytest.raises(AsimulationError):
        max_k_asimulation(EvalPoint(W, "w", ("d",)), EvalPoint(W, "w"), 1)


def test_literal_and_full_atom_modes_differ():
    left = FoModel.build(["a", "b"], {"E": [("a", "b")], "P'": [("a", "b", "b")]}, {"P'": 3})
    right = FoModel.build(["c", "d"], {"E": [("c", "d")]}, {"P'": 3})
    p, q = EvalPoint(left, "a"), EvalPoint(right, "c")
    phi = standard_translation(parse_int("exists w1. P(w1,w1)"))
    assert satisfies_at(p, phi) and not satisfies_at(q, phi)
    assert max_k_asimulation(p, q, 1, LITERAL) is not None
    assert max_k_asimulation(p, q, 1, FULL) is None


def test_quotient_checker_examples():
    p, q = fixture_points()
    assert is_asimulation_quotient(QuotientRelation(p, q, frozenset({QuotientState("M", "a", "c", ())})))
    W = reflexive_world(e_loop=True)
    pw = EvalPoint(W, "w")
    diagonal = frozenset({QuotientState(lt, "w", "w", pairs) for lt in "MN" for pairs in ((), (("w", "w"),))})
    assert is_asimulation_quotient(QuotientRelation(pw, pw, diagonal))
    assert max_asimulation_quotient(pw, pw).states >= diagonal


def test_quotient_e_step_violation():
    left = FoModel.build(["a", "b"], {"E": [("a", "b")]}, {})
    right = FoModel.build(["c"], {}, {})
    rel = QuotientRelation(EvalPoint(left, "a"), EvalPoint(right, "c"), frozenset({QuotientState("M", "a", "c", ())}))
    report = check_asimulation_quotient(rel)
    assert report.condition == "E-step"
    assert replay(report, rel)


def test_lift_of_fixture_seed():
    p, q = fixture_points()
    rel = QuotientRelation(p, q, frozenset({QuotientState("M", "a", "c", ())}))
    lifted = lift_to_k(rel, 3)
    assert lifted.states == {PairState("M", m, "a", (), "c", ()) for m in range(4)}
    assert is_k_asimulation(lifted, 3)


def test_lift_of_empty_relation_fails():
    p, q = fixture_points()
    with pytest.raises(AsimulationError):
        lift_to_k(QuotientRelation(p, q, frozenset()), 1)


def test_lift_of_diagonal():
    W = reflexive_world(with_object=True)
    p = EvalPoint(W, "w")
    assert is_k_asimulation(lift_to_k(max_asimulation_quotient(p, p), 1), 1)


def _random_pair(rng, max_domain=3, letters=(("P", 1),)):
    cfg = GenConfig(max_domain=max_domain, density=rng.choice([0.2, 0.4, 0.6]), letters=letters)
    M = gen_fo_model(cfg, rng, _names("a", rng.randint(1, max_domain)))
    N = gen_fo_model(cfg, rng, _names("c", rng.randint(1, max_domain)))
    return M, N


def test_reachable_scope_agrees_with_full_scope():
    rng = random.Random(3)
    for _ in range(80):
        M, N = _random_pair(rng, 2)
        p, q = EvalPoint(M, rng.choice(M.domain)), EvalPoint(N, rng.choice(N.domain))
        k = rng.randint(0, 2)
        for mode in (LITERAL, FULL):
            full, _ = k_asimulation_fixpoint(p, q, k, mode, "full")
            reach, candidates = k_asimulation_fixpoint(p, q, k, mode, "reachable")
            assert reach == full & candidates


def test_counter_engine_matches_naive_sweeps():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 25)
        table = {}
        for s in range(n):
            table[s] = [(None, [tuple(rng.randrange(n + 3) for _ in range(rng.randint(1, 2)))
                                for _ in range(rng.randint(0, 3))])
                        for _ in range(rng.randint(0, 3))]
        assert greatest_fixpoint(range(n), table.get) == naive_greatest_fixpoint(range(n), table.get)


def test_monotone_in_k():
    rng = random.Random(5)
    for _ in range(60):
        M, N = _random_pair(rng, 2)
        p, q = EvalPoint(M, rng.choice(M.domain)), EvalPoint(N, rng.choice(N.domain))
        previous = None
        for k in range(4, -1, -1):
            rel = max_k_asimulation(p, q, k, FULL)
            if previous is not None:
                assert rel is not None
                bound = p.arity + k
                fragment = {s for s in previous.states if s.hist_len + len(s.left_objects) <= bound}
                assert fragment <= rel.states
            previous = rel


def test_maximality():
    rng = random.Random(8)
    checked = 0
    for _ in range(60):
        M, N = _random_pair(rng, 2)
        p, q = EvalPoint(M, rng.choice(M.domain)), EvalPoint(N, rng.choice(N.domain))
        survivors, candidates = k_asimulation_fixpoint(p, q, 2, FULL)
        if PairState("M", 0, p.world, (), q.world, ()) not in survivors:
            continue
        rel = AsimRelation(p, q, frozenset(survivors), 2, FULL)
        for s in sorted(candidates - survivors)[:10]:
            assert not is_k_asimulation(rel.with_states(rel.states | {s}))
            checked += 1
    assert checked > 0


def test_quotient_agrees_with_oracle_on_random_pairs():
    rng = random.Random(1)
    report = SuiteReport("quotient")
    for _ in range(40):
        M, N = _random_pair(rng, 2, letters=(("P", 0),))
        compare_quotient_with_oracle(M, N, 3, report)
    assert report.cases > 0 and not report.failures


def test_oracle_on_fixtures():
    p, q = fixture_points()
    assert bounded_tuple_oracle(p, q, 3) is not None
    assert bounded_tuple_oracle(q, p, 3) is None


def test_relation_json():
    p, q = fixture_points()
    doc = max_k_asimulation(p, q, 1).to_json()
    assert doc["seed"] == ["M", 0, "a", [], "c", []]
    assert doc["k"] == 1 and doc["atom_mode"] == LITERAL
