"""Hand-derived standard translations, relative to the world variable ``x``.

Each entry is (intuitionistic input, expected first-order output).  The
outputs are written in the printer's canonical form: binary operators nested
under ``->`` are always parenthesized, quantifier bodies extend to the right.
"""

VOCAB = {"P": 1, "Q": 0}

GOLDEN_ST = [
    ("P(w1)", "P'(x,w1)"),
    ("_|_", "~(x = x)"),
    ("Q", "Q'(x)"),
    ("P(w1) | Q", "P'(x,w1) | Q'(x)"),
    ("P(w1) -> Q", "forall y0. R(x,y0) -> (P'(y0,w1) -> Q'(y0))"),
    ("P(w1) -> _|_", "forall y0. R(x,y0) -> (P'(y0,w1) -> ~(y0 = y0))"),
    ("exists w2. P(w2)", "exists w2. E(x,w2) & P'(x,w2)"),
    ("forall w2. P(w2)", "forall y0. forall w2. R(x,y0) & E(y0,w2) -> P'(y0,w2)"),
    (
        "forall w2. P(w2) -> Q",
        "forall y0. forall w2. R(x,y0) & E(y0,w2) -> (forall y1. R(y0,y1) -> (P'(y1,w2) -> Q'(y1)))",
    ),
    (
        "(exists w2. P(w2)) -> forall w3. P(w3)",
        "forall y0. R(x,y0) -> ((exists w2. E(y0,w2) & P'(y0,w2))"
        " -> (forall y1. forall w3. R(y0,y1) & E(y1,w3) -> P'(y1,w3)))",
    ),
    (
        "exists w2. P(w2) & (Q -> P(w1))",
        "exists w2. E(x,w2) & (P'(x,w2) & (forall y0. R(x,y0) -> (Q'(y0) -> P'(y0,w1))))",
    ),
    ("P(y0) -> Q", "forall y1. R(x,y1) -> (P'(y1,y0) -> Q'(y1))"),
]
