import json
import random

import pytest

from intasim.formulas import parse_fo, parse_int
from intasim.semantics import (
    EvalPoint,
    FoModel,
    KripkeError,
    KripkeModel,
    ModelError,
    UnboundVariableError,
    axiom_sentences,
    brute_force_axiom,
    classify_model,
    eval_fo,
    force,
    kripke_to_fo,
    satisfies_at,
)
from intasim.toolkit import GenConfig, gen_fo_model, gen_kripke, hand_corpus, k2, m_minus, n_plus
from intasim.translation import standard_translation

FLAGS = ("rt", "mon", "er", "type_ok", "cd")


def test_empty_r_universal_is_false():
    M = FoModel.build(["a"], {}, {})
    assert eval_fo(M, {"x": "a"}, parse_fo("forall y. R(x,y)")) is False


def test_equality_is_reflexive():
    assert eval_fo(m_minus(), {"x": "a"}, parse_fo("x = x"))


def test_fixture_points():
    phi = parse_fo("~P'(x)")
    assert satisfies_at(EvalPoint(m_minus(), "a"), phi)
    assert not satisfies_at(EvalPoint(n_plus(), "c"), phi)
    assert not satisfies_at(EvalPoint(n_plus(), "c"), parse_fo("~(x = x)"))


def test_unbound_variable_is_an_error():
    with pytest.raises(UnboundVariableError):
        satisfies_at(EvalPoint(m_minus(), "a"), parse_fo("P'(y)"))


def test_point_outside_domain_is_an_error():
    with pytest.raises(ModelError):
        EvalPoint(m_minus(), "zz")


def test_fo_model_json_roundtrip(tmp_path):
    M = gen_fo_model(GenConfig(seed=3, density=0.5))
    path = tmp_path / "m.json"
    path.write_text(json.dumps(M.to_json()))
    assert FoModel.load(path).to_json() == M.to_json()


def test_fo_model_rejects_unknown_elements():
    with pytest.raises(ModelError):
        FoModel.build(["a"], {"R": [("a", "b")]})


def test_force_examples():
    K = k2()
    some_p = parse_int("exists u. P(u)")
    assert not force(K, "u", {}, some_p)
    assert force(K, "v", {}, some_p)
    assert force(K, "u", {}, parse_int("_|_ -> _|_"))


def test_force_rejects_assignment_outside_domain():
    with pytest.raises(ModelError):
        force(k2(), "u", {"w1": "d2"}, parse_int("P(w1)"))


@pytest.mark.parametrize("problem", [
    dict(leq={("u", "v")}),
    dict(domains={"u": {"d1", "d2"}, "v": {"d1"}}),
    dict(val={"P": {"u": {("d1",)}}}),
])
def test_kripke_invariants(problem):
    base = dict(worlds=("u", "v"), leq={("u", "u"), ("u", "v"), ("v", "v")},
                domains={"u": {"d1"}, "v": {"d1", "d2"}}, val={"P": {"v": {("d1",)}}})
    base.update(problem)
    with pytest.raises(KripkeError):
        KripkeModel(**base)


def test_kripke_json_roundtrip(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps(k2().to_json()))
    assert KripkeModel.load(path).to_json() == k2().to_json()


def test_encoding_of_k2():
    M = kripke_to_fo(k2()).model
    assert sorted(M.domain) == ["d1", "d2", "u", "v"]
    assert M.interp["R"] == {("u", "u"), ("u", "v"), ("v", "v")}
    assert M.interp["E"] == {("u", "d1"), ("v", "d1"), ("v", "d2")}
    assert M.interp["P'"] == {("v", "d1")}


def test_encoding_of_single_world():
    K = KripkeModel(("w",), {("w", "w")}, {"w": {"d"}}, {"P": {}}, {"P": 1})
    M = kripke_to_fo(K).model
    assert M.interp["R"] == {("w", "w")}
    assert M.interp["E"] == {("w", "d")}
    assert M.interp["P'"] == frozenset()


def test_empty_domain_world_is_reported():
    K = KripkeModel(("w",), {("w", "w")}, {"w": set()})
    enc = kripke_to_fo(K)
    assert enc.issues
    assert not classify_model(enc.model).er
    with pytest.raises(KripkeError):
        kripke_to_fo(K, strict=True)


def test_encoding_renames_on_name_clash():
    K = KripkeModel(("a",), {("a", "a")}, {"a": {"a"}})
    enc = kripke_to_fo(K)
    assert len(enc.model.domain) == 2
    assert enc.point("a", ["a"]).objects == ("o:a",)


def _flags(M):
    report = classify_model(M)
    return tuple(getattr(report, f) for f in FLAGS)


def _with(M, add=(), drop=(), domain=()):
    rel = {n: set(t) for n, t in M.interp.items()}
    for name, t in add:
        rel[name].add(t)
    for name, t in drop:
        rel[name].discard(t)
    return FoModel.build(tuple(M.domain) + tuple(domain), rel, M.vocab)


def test_classifier_k2_and_constant_variant():
    assert _flags(kripke_to_fo(k2()).model) == (True, True, True, True, False)
    assert _flags(kripke_to_fo(k2(constant=True)).model) == (True, True, True, True, True)


def test_classifier_single_axiom_breaks():
    base = kripke_to_fo(k2(constant=True)).model
    assert _flags(_with(base, drop=[("R", ("v", "v"))])) == (False, True, True, True, True)
    assert _flags(_with(base, add=[("P'", ("u", "d2"))])) == (True, False, True, True, True)
    assert _flags(_with(base, domain=["e"])) == (True, True, False, True, True)
    assert _flags(_with(base, add=[("P'", ("v", "u"))])) == (True, True, True, False, True)


def test_classifier_empty_r_on_one_element():
    report = classify_model(FoModel.build(["a"], {}, {}))
    assert report.rt_unrelativized is False
    sentence, env = report.witnesses["rt_unrelativized"]
    assert env == {"y": "a"}


def test_classifier_agrees_with_brute_force():
    rng = random.Random(7)
    for _ in range(60):
        cfg = GenConfig(max_domain=3, density=rng.choice([0.2, 0.5, 0.8]))
        M = gen_fo_model(cfg, rng)
        report = classify_model(M)
        for group, texts in axiom_sentences(M.vocab).items():
            expected = all(brute_force_axiom(M, t) for t in texts)
            assert getattr(report, group) == expected


def test_encodings_are_intended_models():
    rng = random.Random(11)
    for _ in range(60):
        M = kripke_to_fo(gen_kripke(GenConfig(max_domain=3), rng)).model
        report = classify_model(M)
        assert report.rt and report.mon and report.er and report.type_ok


def test_persistence():
    rng = random.Random(2)
    formulas = hand_corpus()
    for _ in range(40):
        K = gen_kripke(GenConfig(max_domain=2, density=0.5), rng)
        for w in K.worlds:
            for d in K.domains[w]:
                for i in formulas:
                    if force(K, w, {"w1": d}, i):
                        assert all(force(K, v, {"w1": d}, i) for v in K.up(w))


def test_adequacy_sample():
    rng = random.Random(4)
    formulas = hand_corpus()
    translations = [standard_translation(i) for i in formulas]
    for _ in range(40):
        K = gen_kripke(GenConfig(max_domain=2, density=0.5), rng)
        enc = kripke_to_fo(K)
        for w in K.worlds:
            for d in K.domains[w]:
                for i, st in zip(formulas, translations):
                    assert force(K, w, {"w1": d}, i) == satisfies_at(enc.point(w, [d]), st)
