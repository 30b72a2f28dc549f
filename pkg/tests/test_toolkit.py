import json

import pytest

from intasim.formulas import Atom, Bottom, parse_fo, parse_int
from intasim.semantics import KripkeModel
from intasim.toolkit import (
    GenConfig,
    SUITES,
    all_fo_models,
    all_kripke_models,
    corpus,
    find_noninvariance_witness,
    gen_fo_model,
    gen_int_formula,
    gen_kripke,
    nonisomorphic_models,
    run_property_suite,
)
from intasim.translation import standard_translation


def test_minimal_bounds_give_the_empty_one_element_model():
    M = gen_fo_model(GenConfig(seed=1, max_domain=1, density=0))
    assert len(M.domain) == 1
    assert all(not rows for rows in M.interp.values())


def test_depth_zero_gives_a_leaf():
    for seed in range(20):
        f = gen_int_formula(GenConfig(seed=seed, depth=0))
        assert isinstance(f, (Atom, Bottom))


def test_generated_kripke_models_are_valid():
    cfg = GenConfig(max_domain=3, max_worlds=4, density=0.5)
    rng = cfg.rng()
    for _ in range(50):
        K = gen_kripke(cfg, rng)
        assert K.problems() == []
        assert KripkeModel.from_json(json.loads(json.dumps(K.to_json()))).to_json() == K.to_json()


@pytest.mark.parametrize("kw", [dict(max_domain=0), dict(density=1.5), dict(scope="nowhere"), dict(cases=-1),
                                dict(weights=(("atom", 0),))])
def test_invalid_configs(kw):
    with pytest.raises(ValueError):
        GenConfig(**kw)


def test_corpus_respects_arity():
    for n in range(3):
        for f in corpus(n, 20):
            assert standard_translation(f) is not None


def test_small_enumerations():
    assert len(list(all_kripke_models(1, ["d1"], {"P": 1}))) == 2
    two_worlds = list(all_kripke_models(2, ["d1"], {"Q": 0}))
    assert all(K.problems() == [] for K in two_worlds)
    vocab = GenConfig(letters=(("P", 0),)).fo_vocab
    assert len(list(all_fo_models(["e0"], vocab))) == 8
    assert len(nonisomorphic_models(["e0"], vocab)) == 8
    assert len(nonisomorphic_models(["e0", "e1"], vocab)) == 528


def test_witness_for_negated_atom():
    result = find_noninvariance_witness(parse_fo("~P'(x)"), GenConfig(max_domain=1), 100)
    w = result.witness
    assert w is not None and w.replay()
    assert len(w.left.model.domain) == len(w.right.model.domain) == 1
    assert not w.left.model.interp["P'"] and w.right.model.interp["P'"]
    assert w.relation.states == {w.relation.seed}
    assert w.left_value is True and w.right_value is False
    again = find_noninvariance_witness(parse_fo("~P'(x)"), GenConfig(max_domain=1), 100)
    assert again.cases == result.cases and again.witness.to_json() == w.to_json()


def test_no_witness_for_a_translation():
    phi = standard_translation(parse_int("P(w1) -> Q(w1)"))
    result = find_noninvariance_witness(phi, GenConfig(max_domain=2), 2000)
    assert result.witness is None and result.cases == 2000


def test_no_witness_for_falsum():
    result = find_noninvariance_witness(parse_fo("~(x = x)"), GenConfig(max_domain=2), 500)
    assert result.witness is None


def test_search_rejects_stray_free_variables():
    with pytest.raises(ValueError):
        find_noninvariance_witness(parse_fo("P'(x,y)"), GenConfig(), 10)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_property_suite("nope", GenConfig())


def test_empty_budget():
    report = run_property_suite("preservation", GenConfig(cases=0))
    assert report.cases == 0 and not report.ok


@pytest.mark.parametrize("name", sorted(SUITES))
def test_small_suites_pass_and_reproduce(name):
    cfg = GenConfig(max_domain=2, max_worlds=2, max_k=1, depth=2, cases=15)
    first = run_property_suite(name, cfg)
    assert first.ok, first.failures[:2]
    assert json.dumps(run_property_suite(name, cfg).to_json(), sort_keys=True) == json.dumps(
        first.to_json(), sort_keys=True)
