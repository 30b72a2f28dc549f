"""Abstract and concrete syntax for intuitionistic and first-order formulas.

Both languages share one set of immutable node classes.  The intuitionistic
side uses ``Atom`` (any arity, including 0), ``Bottom``, ``And``, ``Or``,
``Implies``, ``Exists`` and ``Forall``; the classical side additionally has
``Eq``, ``Not`` and ``Iff`` but no ``Bottom`` and no 0-ary atoms.

Concrete syntax (shared by parser and printer)::

    formula := iff
    iff     := imp [ "<->" iff ]                 (classical only)
    imp     := or  [ "->" imp ]                  (right associative)
    or      := and { "|" and }
    and     := unary { "&" unary }
    unary   := "~" unary                         (classical only)
             | ("forall" | "exists") var {var} "." formula
             | primary
    primary := "(" formula ")" | "_|_" | var "=" var | letter [ "(" var {"," var} ")" ]

A quantifier body extends as far right as possible.
"""

from __future__ import annotations

import json
import re
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from pathlib import Path
from typing import Union

RESERVED = ("R", "E")
INT = "int"
FO = "fo"


class FormulaError(ValueError):
    pass


class FormulaSyntaxError(FormulaError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


class ArityError(FormulaError):
    def __init__(self, letter: str, expected: int, got: int):
        super().__init__(f"letter {letter!r} has arity {expected}, used with {got} argument(s)")
        self.letter = letter


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[str, ...] = ()


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Eq:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Atom, Bottom, Eq, Not, And, Or, Implies, Iff, Exists, Forall]
BINARY = (And, Or, Implies, Iff)
QUANTIFIERS = (Exists, Forall)
BOTTOM = Bottom()


def conj(parts):
    """Right-nested conjunction of a nonempty sequence."""
    parts = list(parts)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = And(p, out)
    return out


def disj(parts):
    parts = list(parts)
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


# ---------------------------------------------------------------------------
# Vocabulary


class Vocabulary(Mapping):
    """Predicate letters with arities; ``R`` and ``E`` are always binary members."""

    def __init__(self, letters: Mapping[str, int] | None = None):
        table = {"R": 2, "E": 2}
        for name, arity in (letters or {}).items():
            if name in RESERVED:
                if arity != 2:
                    raise ArityError(name, 2, arity)
                continue
            if not isinstance(arity, int) or arity < 1:
                raise FormulaError(f"classical letter {name!r} needs a positive arity, got {arity!r}")
            table[name] = arity
        self._letters = dict(sorted(table.items()))

    def __getitem__(self, name: str) -> int:
        return self._letters[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __repr__(self) -> str:
        return f"Vocabulary({self._letters!r})"

    def __hash__(self) -> int:
        return hash(tuple(self._letters.items()))

    @property
    def extra(self) -> dict[str, int]:
        """Letters other than R and E."""
        return {k: v for k, v in self._letters.items() if k not in RESERVED}

    def union(self, other: Mapping[str, int]) -> "Vocabulary":
        merged = dict(self._letters)
        for name, arity in other.items():
            if merged.get(name, arity) != arity:
                raise ArityError(name, merged[name], arity)
            merged[name] = arity
        return Vocabulary(merged)

    def to_json(self) -> dict[str, int]:
        return dict(self.extra)

    @classmethod
    def load(cls, path: str | Path) -> "Vocabulary":
        return cls(json.loads(Path(path).read_text()))


def prime(letter: str) -> str:
    """Classical image of an intuitionistic letter."""
    return letter + "'"


# ---------------------------------------------------------------------------
# Tokenizer and parser

_TOKEN = re.compile(
    r"\s*(?:(?P<bot>_\|_)|(?P<op><->|->|[~&|=(),.])|(?P<ident>[A-Za-z][A-Za-z0-9_']*))"
)
_KEYWORDS = {"forall", "exists"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if kind == "ident" and value in _KEYWORDS:
            kind = "kw"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, lang: str, arities: Mapping[str, int] | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.lang = lang
        self.declared = dict(arities or {})
        self.seen: dict[str, int] = {}

    def peek(self, offset: int = 0):
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind == "eof":
            raise FormulaSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def fail(self, message: str):
        raise FormulaSyntaxError(message, self.peek()[2])

    def classical_only(self, what: str):
        if self.lang != FO:
            self.fail(f"{what} is not intuitionistic syntax")

    def parse(self) -> Formula:
        f = self.iff()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise FormulaSyntaxError(f"unexpected {val!r}", pos)
        return f

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek()[1] == "<->":
            self.classical_only("'<->'")
            self.take()
            return Iff(left, self.iff())
        return left

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek()[1] == "->":
            self.take()
            return Implies(left, self.imp())
        return left

    def disj(self) -> Formula:
        left = self.conj()
        while self.peek()[1] == "|" and self.peek()[0] == "op":
            self.take()
            left = Or(left, self.conj())
        return left

    def conj(self) -> Formula:
        left = self.unary()
        while self.peek()[1] == "&":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        kind, val, pos = self.peek()
        if val == "~" and kind == "op":
            self.classical_only("'~'")
            self.take()
            return Not(self.unary())
        if kind == "kw":
            self.take()
            names = []
            while self.peek()[0] == "ident":
                names.append(self.take()[1])
            if not names:
                self.fail(f"'{val}' needs a bound variable")
            self.expect(".")
            body = self.iff()
            node = Forall if val == "forall" else Exists
            for name in reversed(names):
                body = node(name, body)
            return body
        return self.primary()

    def primary(self) -> Formula:
        kind, val, pos = self.take()
        if val == "(" and kind == "op":
            inner = self.iff()
            self.expect(")")
            return inner
        if kind == "bot":
            if self.lang == FO:
                raise FormulaSyntaxError("'_|_' is not classical syntax; write ~(x = x)", pos)
            return BOTTOM
        if kind != "ident":
            raise FormulaSyntaxError(f"unexpected {val or 'end of input'!r}", pos)
        nxt = self.peek()[1]
        if nxt == "=":
            self.classical_only("'='")
            self.take()
            rk, rv, rpos = self.take()
            if rk != "ident":
                raise FormulaSyntaxError("expected a variable after '='", rpos)
            return Eq(val, rv)
        args: tuple[str, ...] = ()
        if nxt == "(":
            self.take()
            names = []
            while True:
                ak, av, apos = self.take()
                if ak != "ident":
                    raise FormulaSyntaxError("expected a variable", apos)
                names.append(av)
                if self.peek()[1] == ",":
                    self.take()
                    continue
                self.expect(")")
                break
            args = tuple(names)
        return self.atom(val, args, pos)

    def atom(self, letter: str, args: tuple[str, ...], pos: int) -> Atom:
        if self.lang == INT and letter in RESERVED:
            raise FormulaSyntaxError(f"{letter!r} is reserved for the classical side", pos)
        if self.lang == FO and not args:
            raise FormulaSyntaxError(f"classical letter {letter!r} needs arguments", pos)
        expected = 2 if (self.lang == FO and letter in RESERVED) else self.declared.get(letter, self.seen.get(letter))
        if expected is not None and expected != len(args):
            raise ArityError(letter, expected, len(args))
        self.seen[letter] = len(args)
        return Atom(letter, args)


def parse_int(text: str, arities: Mapping[str, int] | None = None) -> Formula:
    """Parse an intuitionistic formula; ``arities`` declares letter arities."""
    return _Parser(text, INT, arities).parse()


def parse_fo(text: str, vocab: Mapping[str, int] | None = None) -> Formula:
    """Parse a first-order formula over ``R``, ``E`` and the letters of ``vocab``."""
    return _Parser(text, FO, vocab).parse()


# ---------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
_RIGHT_ASSOC = (Implies, Iff)


def _prec(f: Formula) -> int:
    if isinstance(f, QUANTIFIERS):
        return 0
    if isinstance(f, Not):
        return 5
    return _PREC.get(type(f), 6)


def to_text(f: Formula) -> str:
    """Render in the concrete syntax accepted by the parsers."""
    if isinstance(f, Atom):
        return f"{f.pred}({','.join(f.args)})" if f.args else f.pred
    if isinstance(f, Bottom):
        return "_|_"
    if isinstance(f, Eq):
        return f"{f.left} = {f.right}"
    if isinstance(f, Not):
        inner = to_text(f.body)
        if _prec(f.body) >= 5 and not isinstance(f.body, Eq):
            return f"~{inner}"
        return f"~({inner})"
    if isinstance(f, QUANTIFIERS):
        kw = "forall" if isinstance(f, Forall) else "exists"
        return f"{kw} {f.var}. {to_text(f.body)}"
    p = _PREC[type(f)]
    left, right = to_text(f.left), to_text(f.right)
    lp, rp = _prec(f.left), _prec(f.right)
    if isinstance(f, _RIGHT_ASSOC):
        # nested implications are parenthesized for readability
        left_paren, right_paren = lp <= p, rp <= p
    else:
        left_paren, right_paren = lp < p, rp <= p
    if left_paren:
        left = f"({left})"
    if right_paren:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# ---------------------------------------------------------------------------
# Structural functions


def normalize_iff(f: Formula) -> Formula:
    """Expand every ``Iff`` into a conjunction of two implications."""
    if isinstance(f, (Atom, Bottom, Eq)):
        return f
    if isinstance(f, Not):
        return Not(normalize_iff(f.body))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, normalize_iff(f.body))
    left, right = normalize_iff(f.left), normalize_iff(f.right)
    if isinstance(f, Iff):
        return And(Implies(left, right), Implies(right, left))
    return type(f)(left, right)


def degree(f: Formula) -> int:
    """Quantifier nesting depth."""
    f = normalize_iff(f)
    return _degree(f)


def _degree(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom, Eq)):
        return 0
    if isinstance(f, Not):
        return _degree(f.body)
    if isinstance(f, QUANTIFIERS):
        return _degree(f.body) + 1
    return max(_degree(f.left), _degree(f.right))


def free_vars(f: Formula) -> tuple[str, ...]:
    """Free variables in order of first occurrence."""
    cached = f.__dict__.get("_free_vars")
    if cached is None:
        cached = _free_vars(f)
        object.__setattr__(f, "_free_vars", cached)
    return cached


def _free_vars(f: Formula) -> tuple[str, ...]:
    out: dict[str, None] = {}

    def walk(g: Formula, bound: frozenset[str]):
        if isinstance(g, Atom):
            for v in g.args:
                if v not in bound:
                    out.setdefault(v)
        elif isinstance(g, Eq):
            for v in (g.left, g.right):
                if v not in bound:
                    out.setdefault(v)
        elif isinstance(g, Not):
            walk(g.body, bound)
        elif isinstance(g, QUANTIFIERS):
            walk(g.body, bound | {g.var})
        elif isinstance(g, BINARY):
            walk(g.left, bound)
            walk(g.right, bound)

    walk(f, frozenset())
    return tuple(out)


def all_vars(f: Formula) -> set[str]:
    """Every variable name occurring in ``f``, free or bound."""
    if isinstance(f, Atom):
        return set(f.args)
    if isinstance(f, Eq):
        return {f.left, f.right}
    if isinstance(f, Bottom):
        return set()
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, QUANTIFIERS):
        return all_vars(f.body) | {f.var}
    return all_vars(f.left) | all_vars(f.right)


def letters(f: Formula) -> dict[str, int]:
    """Predicate letters occurring in ``f`` with their arities."""
    out: dict[str, int] = {}

    def walk(g: Formula):
        if isinstance(g, Atom):
            if out.setdefault(g.pred, len(g.args)) != len(g.args):
                raise ArityError(g.pred, out[g.pred], len(g.args))
        elif isinstance(g, Not):
            walk(g.body)
        elif isinstance(g, QUANTIFIERS):
            walk(g.body)
        elif isinstance(g, BINARY):
            walk(g.left)
            walk(g.right)

    walk(f)
    return out


def vocabulary_of(f: Formula) -> Vocabulary:
    return Vocabulary(letters(f))


def size(f: Formula) -> int:
    """Number of nodes."""
    if isinstance(f, (Atom, Bottom, Eq)):
        return 1
    if isinstance(f, (Not,) + QUANTIFIERS):
        return 1 + size(f.body)
    return 1 + size(f.left) + size(f.right)


def rename_bound(f: Formula, prefix: str = "v") -> Formula:
    """Rename bound variables canonically (``v0``, ``v1``, ... in binding order)."""
    counter = iter(range(10**9))

    def walk(g: Formula, env: dict[str, str]) -> Formula:
        if isinstance(g, Atom):
            return Atom(g.pred, tuple(env.get(a, a) for a in g.args))
        if isinstance(g, Eq):
            return Eq(env.get(g.left, g.left), env.get(g.right, g.right))
        if isinstance(g, Bottom):
            return g
        if isinstance(g, Not):
            return Not(walk(g.body, env))
        if isinstance(g, QUANTIFIERS):
            name = f"{prefix}{next(counter)}"
            return type(g)(name, walk(g.body, {**env, g.var: name}))
        return type(g)(walk(g.left, env), walk(g.right, env))

    return walk(f, {})
