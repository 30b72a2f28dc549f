"""Standard translation of intuitionistic predicate formulas and asimulations between their models."""

from .formulas import parse_fo, parse_int, to_text
from .semantics import EvalPoint, FoModel, KripkeModel, kripke_to_fo
from .translation import standard_translation

__version__ = "0.1.0"

__all__ = [
    "EvalPoint",
    "FoModel",
    "KripkeModel",
    "kripke_to_fo",
    "parse_fo",
    "parse_int",
    "standard_translation",
    "to_text",
]
