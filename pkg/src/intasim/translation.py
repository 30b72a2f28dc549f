"""Standard x-translation of intuitionistic formulas into first-order logic."""

from __future__ import annotations

from itertools import count

from .formulas import (
    RESERVED,
    And,
    Atom,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    FormulaError,
    Implies,
    Not,
    Or,
    all_vars,
    prime,
)


class TranslationError(FormulaError):
    pass


def standard_translation(i: Formula, x: str = "x") -> Formula:
    """Translate ``i`` relative to the world variable ``x``.

    Fresh world variables are named ``y0``, ``y1``, ... in pre-order, skipping
    any name already used in ``i``, so the output is deterministic.
    """
    used = all_vars(i)
    if x in used:
        raise TranslationError(f"world variable {x!r} occurs in the formula")
    used.add(x)
    counter = count()

    def fresh() -> str:
        while True:
            name = f"y{next(counter)}"
            if name not in used:
                used.add(name)
                return name

    def st(f: Formula, w: str) -> Formula:
        if isinstance(f, Atom):
            if f.pred in RESERVED:
                raise TranslationError(f"intuitionistic letter {f.pred!r} collides with R/E")
            return Atom(prime(f.pred), (w,) + f.args)
        if isinstance(f, Bottom):
            return Not(Eq(w, w))
        if isinstance(f, And):
            return And(st(f.left, w), st(f.right, w))
        if isinstance(f, Or):
            return Or(st(f.left, w), st(f.right, w))
        if isinstance(f, Implies):
            y = fresh()
            return Forall(y, Implies(Atom("R", (w, y)), Implies(st(f.left, y), st(f.right, y))))
        if isinstance(f, Exists):
            return Exists(f.var, And(Atom("E", (w, f.var)), st(f.body, w)))
        if isinstance(f, Forall):
            y = fresh()
            guard = And(Atom("R", (w, y)), Atom("E", (y, f.var)))
            return Forall(y, Forall(f.var, Implies(guard, st(f.body, y))))
        raise TranslationError(f"not an intuitionistic formula: {f!r}")

    return st(i, x)


def translation_degree(i: Formula) -> int:
    """Degree of the standard translation, computed without building it."""
    if isinstance(i, (Atom, Bottom)):
        return 0
    if isinstance(i, (And, Or)):
        return max(translation_degree(i.left), translation_degree(i.right))
    if isinstance(i, Implies):
        return max(translation_degree(i.left), translation_degree(i.right)) + 1
    if isinstance(i, Exists):
        return translation_degree(i.body) + 1
    if isinstance(i, Forall):
        return translation_degree(i.body) + 2
    raise TranslationError(f"not an intuitionistic formula: {i!r}")
