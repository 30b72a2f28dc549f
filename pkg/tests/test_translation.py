import pytest
from hypothesis import given, settings

from intasim.formulas import (
    Atom,
    BOTTOM,
    Eq,
    Forall,
    Implies,
    Not,
    degree,
    free_vars,
    parse_int,
    rename_bound,
    to_text,
    vocabulary_of,
)
from intasim.translation import TranslationError, standard_translation, translation_degree

from golden import GOLDEN_ST, VOCAB
from strategies import int_formulas


@pytest.mark.parametrize("source,expected", GOLDEN_ST)
def test_golden_corpus(source, expected):
    assert to_text(standard_translation(parse_int(source, VOCAB))) == expected


def test_atom():
    assert standard_translation(Atom("P", ("w1",))) == Atom("P'", ("x", "w1"))


def test_bottom_is_self_inequality():
    assert standard_translation(BOTTOM) == Not(Eq("x", "x"))


def test_implication_clause():
    st = standard_translation(parse_int("P(w1) -> Q(w1)"))
    body = Implies(Atom("R", ("x", "y0")), Implies(Atom("P'", ("y0", "w1")), Atom("Q'", ("y0", "w1"))))
    assert st == Forall("y0", body)


def test_other_world_variable():
    assert to_text(standard_translation(parse_int("P(w1) -> Q"), "z")) == (
        "forall y0. R(z,y0) -> (P'(y0,w1) -> Q'(y0))"
    )


def test_world_variable_clash_is_rejected():
    with pytest.raises(TranslationError):
        standard_translation(parse_int("P(x)"))


def test_reserved_letter_is_rejected():
    with pytest.raises(TranslationError):
        standard_translation(Atom("R", ("w1", "w2")))


@pytest.mark.parametrize("source,k", [("P(w1)", 0), ("P(w1) -> Q(w1)", 1), ("forall w2. P(w2)", 2)])
def test_translation_degree_examples(source, k):
    i = parse_int(source)
    assert translation_degree(i) == k == degree(standard_translation(i))


@settings(max_examples=400, deadline=None)
@given(int_formulas())
def test_degree_agrees(i):
    assert translation_degree(i) == degree(standard_translation(i))


@settings(max_examples=300, deadline=None)
@given(int_formulas())
def test_free_variables(i):
    assert set(free_vars(standard_translation(i))) <= {"x"} | set(free_vars(i))


@settings(max_examples=300, deadline=None)
@given(int_formulas())
def test_vocabulary_is_primed(i):
    letters = set(vocabulary_of(standard_translation(i)))
    primed = {a.pred + "'" for a in _atoms(i)}
    assert letters <= {"R", "E"} | primed


def _atoms(f):
    if isinstance(f, Atom):
        yield f
    for child in ("left", "right", "body"):
        if hasattr(f, child):
            yield from _atoms(getattr(f, child))


@settings(max_examples=200, deadline=None)
@given(int_formulas(), int_formulas())
def test_injective_up_to_bound_renaming(i, j):
    if rename_bound(i) != rename_bound(j):
        assert rename_bound(standard_translation(i)) != rename_bound(standard_translation(j))
