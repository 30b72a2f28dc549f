"""Acceptance criteria 1 to 10, one test each.

Every test prints a single pass/fail line and asserts the same verdict.
Time limits are part of the verdict.  Run standalone with
``python tests/test_acceptance.py`` to see only the lines.
"""

import time

from acceptance_log import record
from golden import GOLDEN_ST, VOCAB

from intasim.formulas import parse_fo, parse_int, to_text
from intasim.semantics import FoModel, classify_model, kripke_to_fo
from intasim.toolkit import GenConfig, find_noninvariance_witness, k2, run_property_suite
from intasim.translation import standard_translation

FLAGS = ("rt", "mon", "er", "type_ok", "cd")


def _suite(name, **kw):
    start = time.perf_counter()
    report = run_property_suite(name, GenConfig(**kw))
    return report, time.perf_counter() - start


def _summary(report):
    text = f"{report.cases} cases, {len(report.failures)} failures"
    if report.skipped:
        text += f", {report.skipped} skipped"
    return text


def test_criterion_01_golden_translations():
    start = time.perf_counter()
    exact = sum(to_text(standard_translation(parse_int(src, VOCAB))) == want for src, want in GOLDEN_ST)
    elapsed = time.perf_counter() - start
    ok = exact == len(GOLDEN_ST) == 12 and elapsed < 1
    record(1, ok, "standard translation golden corpus", f"{exact}/{len(GOLDEN_ST)} byte-exact", elapsed)
    assert ok


def test_criterion_02_degree():
    report, elapsed = _suite("degree", depth=6, cases=10_000, seed=2)
    ok = report.cases == 10_000 and not report.failures and elapsed < 10
    record(2, ok, "translation degree vs degree of the translation", _summary(report), elapsed)
    assert ok


def test_criterion_03_adequacy():
    report, elapsed = _suite("adequacy", max_domain=2, max_worlds=3, depth=3, cases=10**9)
    ok = report.cases > 0 and not report.failures and elapsed < 300
    record(3, ok, "forcing vs translation, all Kripke models up to 3 worlds", _summary(report), elapsed)
    assert ok


def test_criterion_04_preservation():
    report, elapsed = _suite("preservation", max_domain=4, max_arity=2, max_k=3, cases=1000, seed=4)
    ok = report.cases == 1000 and not report.failures and report.notes["transfers_checked"] > 0 and elapsed < 300
    detail = (f"{_summary(report)}, {report.notes['related_pairs']} related pairs,"
              f" {report.notes['transfers_checked']} transfers")
    record(4, ok, "truth transfer along greatest k-asimulations", detail, elapsed)
    assert ok


def test_criterion_05_soundness_and_maximality():
    sampled, t1 = _suite("soundness", max_domain=4, max_arity=2, max_k=3, cases=200, seed=5)
    full, t2 = _suite("soundness", max_domain=2, max_arity=1, max_k=2, cases=200, seed=5, scope="full")
    ok = all(r.cases == 200 and not r.failures for r in (sampled, full))
    detail = f"reachable scope {_summary(sampled)}; full scope {_summary(full)}"
    record(5, ok, "fixpoint soundness and maximality", detail, t1 + t2)
    assert ok


def test_criterion_06_lift():
    report, elapsed = _suite("lift", max_domain=2, max_arity=1, max_k=4, cases=200, seed=6)
    ok = report.cases == 200 and not report.failures
    record(6, ok, "lifted quotient asimulations for k = 0..4", _summary(report), elapsed)
    assert ok


def test_criterion_07_theory_constructions():
    report, elapsed = _suite("theory", max_domain=2, max_arity=1, max_k=1, cases=200, seed=7)
    ok = report.cases == 200 and not report.failures
    record(7, ok, "asimulations built from theory inclusion", _summary(report), elapsed)
    assert ok


def test_criterion_08_quotient_vs_oracle():
    report, elapsed = _suite("quotient", max_domain=2, letters=(("P", 0),), cases=10**9)
    ok = report.cases > 1_000_000 and not report.failures and elapsed < 600
    record(8, ok, "quotient fixpoint vs bounded tuple oracle, all pairs up to 2 elements", _summary(report),
           elapsed)
    assert ok


def test_criterion_09_noninvariance_search():
    start = time.perf_counter()
    runs = [find_noninvariance_witness(parse_fo("~P'(x)"), GenConfig(max_domain=1), 10_000) for _ in range(2)]
    w = runs[0].witness
    found = (w is not None and w.replay() and runs[1].witness is not None
             and runs[1].witness.to_json() == w.to_json() and runs[0].cases == runs[1].cases
             and w.left.model.interp["P'"] == frozenset() and len(w.right.model.interp["P'"]) == 1)
    phi = standard_translation(parse_int("P(w1) -> Q(w1)"))
    none = find_noninvariance_witness(phi, GenConfig(max_domain=3), 10_000)
    elapsed = time.perf_counter() - start
    ok = found and none.witness is None and none.cases == 10_000
    detail = (f"negated atom: witness after {runs[0].cases} cases, reproducible;"
              f" translated implication: {'no witness' if none.witness is None else 'WITNESS'}"
              f" in {none.cases} cases")
    record(9, ok, "non-invariance witness search", detail, elapsed)
    assert ok


def _variant(M, add=(), drop=(), extra=()):
    rel = {n: set(rows) for n, rows in M.interp.items()}
    for name, t in add:
        rel[name].add(t)
    for name, t in drop:
        rel[name].discard(t)
    return FoModel.build(tuple(M.domain) + tuple(extra), rel, M.vocab)


def test_criterion_10_classifier():
    start = time.perf_counter()
    constant = kripke_to_fo(k2(constant=True)).model
    cases = {
        "K2 encoding": (kripke_to_fo(k2()).model, (1, 1, 1, 1, 0)),
        "constant-domain variant": (constant, (1, 1, 1, 1, 1)),
        "no R-loop at v": (_variant(constant, drop=[("R", ("v", "v"))]), (0, 1, 1, 1, 1)),
        "P' not persistent": (_variant(constant, add=[("P'", ("u", "d2"))]), (1, 0, 1, 1, 1)),
        "isolated element": (_variant(constant, extra=["e"]), (1, 1, 0, 1, 1)),
        "P' of a non-object": (_variant(constant, add=[("P'", ("v", "u"))]), (1, 1, 1, 0, 1)),
        "broken transitivity": (_variant(
            FoModel.build(["u", "v", "t", "d"],
                          {"R": [("u", "u"), ("v", "v"), ("t", "t"), ("u", "v"), ("v", "t")],
                           "E": [("u", "d"), ("v", "d"), ("t", "d")]}, {"P'": 2})), (0, 1, 1, 1, 1)),
    }
    wrong = []
    for name, (M, want) in cases.items():
        report = classify_model(M)
        got = tuple(int(getattr(report, f)) for f in FLAGS)
        if got != want:
            wrong.append(f"{name} gave {got}")
    elapsed = time.perf_counter() - start
    ok = not wrong
    detail = f"{len(cases) - len(wrong)}/{len(cases)} flag patterns exact" + (f" ({'; '.join(wrong)})" if wrong else "")
    record(10, ok, "axiom classifier", detail, elapsed)
    assert ok


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
