"""Finite classical and Kripke models, with the encoding between them."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from pathlib import Path

from .formulas import (
    And,
    Atom,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Vocabulary,
    free_vars,
    parse_fo,
    prime,
)


class ModelError(ValueError):
    pass


class KripkeError(ModelError):
    pass


# ---------------------------------------------------------------------------
# Classical models


@dataclass(frozen=True, eq=False)
class FoModel:
    """A finite model over a vocabulary containing R and E."""

    domain: tuple[str, ...]
    interp: Mapping[str, frozenset[tuple[str, ...]]]
    vocab: Vocabulary

    def __post_init__(self):
        if not self.domain:
            raise ModelError("domain must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise ModelError("domain has duplicate elements")
        dom = set(self.domain)
        interp = {name: frozenset() for name in self.vocab}
        for name, tuples in self.interp.items():
            if name not in self.vocab:
                raise ModelError(f"letter {name!r} is not in the vocabulary")
            arity = self.vocab[name]
            rows = frozenset(tuple(t) for t in tuples)
            for t in rows:
                if len(t) != arity:
                    raise ModelError(f"{name}{t} does not match arity {arity}")
                if not dom.issuperset(t):
                    raise ModelError(f"{name}{t} mentions an element outside the domain")
            interp[name] = rows
        object.__setattr__(self, "interp", interp)

    @classmethod
    def build(cls, domain: Iterable[str], rel: Mapping[str, Iterable[Sequence[str]]],
              vocab: Mapping[str, int] | None = None) -> "FoModel":
        """Build a model, inferring missing arities from the tuples."""
        rel = {k: [tuple(t) for t in v] for k, v in rel.items()}
        arities = {"R": 2, "E": 2, **dict(vocab or {})}
        for name, rows in rel.items():
            if name not in arities:
                if not rows:
                    raise ModelError(f"cannot infer the arity of {name!r} from an empty relation")
                arities[name] = len(rows[0])
        return cls(tuple(domain), rel, Vocabulary(arities))

    def holds(self, letter: str, args: tuple[str, ...]) -> bool:
        return args in self.interp.get(letter, ())

    @cached_property
    def successors(self) -> dict[str, dict[str, tuple[str, ...]]]:
        """Successor lists for R and E, in domain order."""
        order = {e: i for i, e in enumerate(self.domain)}
        out = {}
        for name in ("R", "E"):
            table: dict[str, list[str]] = {e: [] for e in self.domain}
            for a, b in self.interp["R" if name == "R" else "E"]:
                table[a].append(b)
            out[name] = {a: tuple(sorted(bs, key=order.__getitem__)) for a, bs in table.items()}
        return out

    def r_succ(self, a: str) -> tuple[str, ...]:
        return self.successors["R"][a]

    def e_succ(self, a: str) -> tuple[str, ...]:
        return self.successors["E"][a]

    @cached_property
    def facts_by_world(self) -> dict[str, dict[str, frozenset[tuple[str, ...]]]]:
        """letter -> first argument -> set of remaining argument tuples (R/E excluded)."""
        out = {}
        for name, arity in self.vocab.extra.items():
            table: dict[str, set] = {a: set() for a in self.domain}
            for t in self.interp[name]:
                table[t[0]].add(t[1:])
            out[name] = {a: frozenset(v) for a, v in table.items()}
        return out

    def to_json(self) -> dict:
        return {
            "domain": list(self.domain),
            "vocab": self.vocab.to_json(),
            "rel": {k: sorted(list(t) for t in v) for k, v in self.interp.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping, vocab: Mapping[str, int] | None = None) -> "FoModel":
        arities = dict(vocab or {})
        arities.update(data.get("vocab", {}))
        return cls.build(data["domain"], data.get("rel", {}), arities)

    @classmethod
    def load(cls, path: str | Path, vocab: Mapping[str, int] | None = None) -> "FoModel":
        return cls.from_json(json.loads(Path(path).read_text()), vocab)


@dataclass(frozen=True)
class EvalPoint:
    """A model with a distinguished world element and an object tuple."""

    model: FoModel
    world: str
    objects: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        dom = set(self.model.domain)
        missing = [e for e in (self.world,) + self.objects if e not in dom]
        if missing:
            raise ModelError(f"elements {missing} are not in the model's domain")

    @property
    def arity(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        return f"EvalPoint({self.world};{','.join(self.objects)})"


class UnboundVariableError(ModelError):
    pass


def eval_fo(model: FoModel, assignment: Mapping[str, str], phi: Formula) -> bool:
    """Tarski truth of ``phi`` in ``model`` under ``assignment``."""
    missing = [v for v in free_vars(phi) if v not in assignment]
    if missing:
        raise UnboundVariableError(f"no value for free variable(s) {missing}")
    return _eval(model, dict(assignment), phi)


def _eval(model: FoModel, env: dict[str, str], f: Formula) -> bool:
    t = type(f)
    if t is Atom:
        return tuple([env[a] for a in f.args]) in model.interp[f.pred]
    if t is And:
        return _eval(model, env, f.left) and _eval(model, env, f.right)
    if t is Implies:
        return (not _eval(model, env, f.left)) or _eval(model, env, f.right)
    if t is Or:
        return _eval(model, env, f.left) or _eval(model, env, f.right)
    if t is Not:
        return not _eval(model, env, f.body)
    if t is Eq:
        return env[f.left] == env[f.right]
    if t is Iff:
        return _eval(model, env, f.left) == _eval(model, env, f.right)
    if t is Exists or t is Forall:
        want = t is Exists
        saved = env.get(f.var, _UNSET)
        try:
            for d in model.domain:
                env[f.var] = d
                if _eval(model, env, f.body) == want:
                    return want
            return not want
        finally:
            if saved is _UNSET:
                env.pop(f.var, None)
            else:
                env[f.var] = saved
    if t is Bottom:
        raise ModelError("Bottom is not a classical formula; translate it first")
    raise ModelError(f"unknown formula node {f!r}")


_UNSET = object()


def default_object_vars(n: int) -> tuple[str, ...]:
    return tuple(f"w{i}" for i in range(1, n + 1))


def satisfies_at(pt: EvalPoint, phi: Formula, x: str = "x",
                 ws: Sequence[str] | None = None) -> bool:
    """Truth of ``phi(x, ws)`` at an evaluation point; ``ws`` defaults to w1..wn."""
    ws = tuple(ws) if ws is not None else default_object_vars(pt.arity)
    if len(ws) != pt.arity:
        raise ModelError(f"{len(ws)} object variables for a point of arity {pt.arity}")
    allowed = {x, *ws}
    extra = [v for v in free_vars(phi) if v not in allowed]
    if extra:
        raise UnboundVariableError(f"free variable(s) {extra} not among {x}, {', '.join(ws)}")
    env = {x: pt.world}
    env.update(zip(ws, pt.objects))
    return _eval(pt.model, env, phi)


# ---------------------------------------------------------------------------
# Kripke models


@dataclass(frozen=True, eq=False)
class KripkeModel:
    """A finite Kripke model with increasing domains and persistent valuation.

    ``val`` maps an intuitionistic letter to a map from world to the set of
    object tuples it holds of there; 0-ary letters hold at ``w`` iff ``()`` is
    in ``val[P][w]``.
    """

    worlds: tuple[str, ...]
    leq: frozenset[tuple[str, str]]
    domains: Mapping[str, frozenset[str]]
    val: Mapping[str, Mapping[str, frozenset[tuple[str, ...]]]] = field(default_factory=dict)
    arities: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "worlds", tuple(self.worlds))
        object.__setattr__(self, "leq", frozenset(tuple(p) for p in self.leq))
        object.__setattr__(self, "domains", {w: frozenset(self.domains.get(w, ())) for w in self.worlds})
        val = {}
        arities = dict(self.arities)
        for letter, table in self.val.items():
            val[letter] = {w: frozenset(tuple(t) for t in table.get(w, ())) for w in self.worlds}
            lengths = {len(t) for rows in val[letter].values() for t in rows}
            if letter not in arities:
                if len(lengths) != 1:
                    raise KripkeError(f"cannot infer a single arity for {letter!r}")
                arities[letter] = lengths.pop()
        for letter in arities:
            val.setdefault(letter, {w: frozenset() for w in self.worlds})
        object.__setattr__(self, "val", val)
        object.__setattr__(self, "arities", arities)
        problems = self.problems()
        if problems:
            raise KripkeError("; ".join(problems))

    def problems(self) -> list[str]:
        out = []
        ws = set(self.worlds)
        if len(ws) != len(self.worlds):
            out.append("duplicate worlds")
        for u, v in self.leq:
            if u not in ws or v not in ws:
                out.append(f"leq pair ({u},{v}) mentions an unknown world")
        for w in self.worlds:
            if (w, w) not in self.leq:
                out.append(f"leq is not reflexive at {w}")
        for u, v in self.leq:
            for v2, t in self.leq:
                if v == v2 and (u, t) not in self.leq:
                    out.append(f"leq is not transitive: {u}<={v}<={t}")
        for u, v in sorted(self.leq):
            if not self.domains[u] <= self.domains[v]:
                out.append(f"domain of {u} is not included in the domain of {v}")
        for letter, table in self.val.items():
            if letter in ("R", "E"):
                out.append(f"{letter!r} is reserved for the classical side")
            for w, rows in table.items():
                for t in rows:
                    if len(t) != self.arities[letter]:
                        out.append(f"{letter}{t} at {w} has the wrong arity")
                    if not self.domains[w].issuperset(t):
                        out.append(f"{letter}{t} at {w} uses objects outside the domain of {w}")
            for u, v in self.leq:
                if not table[u] <= table[v]:
                    out.append(f"{letter} is not persistent from {u} to {v}")
        return out

    def up(self, w: str) -> tuple[str, ...]:
        return self._tables[0][w]

    def sorted_domain(self, w: str) -> tuple[str, ...]:
        return self._tables[1][w]

    @cached_property
    def _tables(self):
        ups = {w: tuple(v for v in self.worlds if (w, v) in self.leq) for w in self.worlds}
        doms = {w: tuple(sorted(self.domains[w])) for w in self.worlds}
        return ups, doms

    @property
    def objects(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for w in self.worlds:
            for d in sorted(self.domains[w]):
                seen.setdefault(d)
        return tuple(seen)

    def to_json(self) -> dict:
        return {
            "worlds": list(self.worlds),
            "leq": sorted(list(p) for p in self.leq),
            "domains": {w: sorted(self.domains[w]) for w in self.worlds},
            "val": {p: {w: sorted(list(t) for t in rows) for w, rows in table.items() if rows}
                    for p, table in self.val.items()},
            "arities": dict(self.arities),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "KripkeModel":
        return cls(
            worlds=tuple(data["worlds"]),
            leq=frozenset(tuple(p) for p in data["leq"]),
            domains={w: frozenset(ds) for w, ds in data.get("domains", {}).items()},
            val={p: {w: frozenset(tuple(t) for t in rows) for w, rows in table.items()}
                 for p, table in data.get("val", {}).items()},
            arities=dict(data.get("arities", {})),
        )

    @classmethod
    def load(cls, path: str | Path) -> "KripkeModel":
        return cls.from_json(json.loads(Path(path).read_text()))


def force(K: KripkeModel, w: str, assignment: Mapping[str, str], i: Formula) -> bool:
    """Kripke forcing of an intuitionistic formula at world ``w``."""
    if w not in K.domains:
        raise KripkeError(f"unknown world {w!r}")
    missing = [v for v in free_vars(i) if v not in assignment]
    if missing:
        raise UnboundVariableError(f"no value for free variable(s) {missing}")
    outside = [v for v in free_vars(i) if assignment[v] not in K.domains[w]]
    if outside:
        raise KripkeError(f"variable(s) {outside} are assigned objects outside the domain of {w}")
    return _force(K, w, dict(assignment), i)


def _force(K: KripkeModel, w: str, env: dict[str, str], i: Formula) -> bool:
    t = type(i)
    if t is Atom:
        return tuple([env[a] for a in i.args]) in K.val.get(i.pred, {}).get(w, ())
    if t is Bottom:
        return False
    if t is And:
        return _force(K, w, env, i.left) and _force(K, w, env, i.right)
    if t is Or:
        return _force(K, w, env, i.left) or _force(K, w, env, i.right)
    if t is Implies:
        return all(not _force(K, v, env, i.left) or _force(K, v, env, i.right) for v in K.up(w))
    if t is Exists or t is Forall:
        saved = env.get(i.var, _UNSET)
        try:
            if t is Exists:
                for d in K.sorted_domain(w):
                    env[i.var] = d
                    if _force(K, w, env, i.body):
                        return True
                return False
            for v in K.up(w):
                for d in K.sorted_domain(v):
                    env[i.var] = d
                    if not _force(K, v, env, i.body):
                        return False
            return True
        finally:
            if saved is _UNSET:
                env.pop(i.var, None)
            else:
                env[i.var] = saved
    raise KripkeError(f"not an intuitionistic formula: {i!r}")


@dataclass(frozen=True)
class Encoding:
    """Result of ``kripke_to_fo``: the model with its id maps, plus any reported issues."""

    model: FoModel
    world_ids: Mapping[str, str]
    object_ids: Mapping[str, str]
    issues: tuple[str, ...] = ()

    def point(self, world: str, objects: Sequence[str] = ()) -> EvalPoint:
        return EvalPoint(self.model, self.world_ids[world], tuple(self.object_ids[o] for o in objects))


def kripke_to_fo(K: KripkeModel, strict: bool = False) -> Encoding:
    """Encode ``K`` as a classical model: worlds and objects share one domain.

    R is the order, E(w, d) holds iff d exists at w, and P'(w, ds) iff P(ds)
    holds at w.  Worlds with empty domains break the ER axioms; they are
    listed in ``issues`` (or raise when ``strict``).
    """
    objects = K.objects
    world_ids = {w: w for w in K.worlds}
    object_ids = {d: d for d in objects}
    if set(K.worlds) & set(objects):
        world_ids = {w: f"w:{w}" for w in K.worlds}
        object_ids = {d: f"o:{d}" for d in objects}
    issues = tuple(f"world {w} has an empty domain" for w in K.worlds if not K.domains[w])
    if issues and strict:
        raise KripkeError("; ".join(issues))
    rel: dict[str, set] = {
        "R": {(world_ids[u], world_ids[v]) for u, v in K.leq},
        "E": {(world_ids[w], object_ids[d]) for w in K.worlds for d in K.domains[w]},
    }
    vocab = {}
    for letter, arity in K.arities.items():
        name = prime(letter)
        vocab[name] = arity + 1
        rel[name] = {(world_ids[w],) + tuple(object_ids[d] for d in t)
                     for w, rows in K.val[letter].items() for t in rows}
    domain = tuple(world_ids[w] for w in K.worlds) + tuple(object_ids[d] for d in objects)
    model = FoModel(domain, {k: frozenset(v) for k, v in rel.items()}, Vocabulary(vocab))
    return Encoding(model, world_ids, object_ids, issues)


# ---------------------------------------------------------------------------
# Axiom classification


@dataclass(frozen=True)
class ModelClassReport:
    rt: bool
    mon: bool
    er: bool
    type_ok: bool
    cd: bool
    witnesses: Mapping[str, tuple[str, dict[str, str]]]
    rt_unrelativized: bool
    cd_unrelativized: bool

    def flags(self) -> dict[str, bool]:
        return {"rt": self.rt, "mon": self.mon, "er": self.er, "type_ok": self.type_ok, "cd": self.cd}


def _vars(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def axiom_sentences(vocab: Vocabulary) -> dict[str, list[str]]:
    """The intended-model axioms, as concrete-syntax sentences per group.

    RT and CD are relativized to worlds (elements with an E-successor): read
    over the whole domain they clash with ER, since objects carry no R-loop.
    The unrelativized readings are kept under ``rt_unrelativized`` and
    ``cd_unrelativized``.
    """
    world = "(exists z. E({v},z))"
    mon, typ = [], []
    for letter, arity in vocab.items():
        if letter == "R":
            continue
        ws = _vars("w", arity - 1)
        args = "".join("," + w for w in ws)
        quant = " ".join(["y", "z"] + ws)
        mon.append(f"forall {quant}. ({letter}(y{args}) & R(y,z)) -> {letter}(z{args})")
        if ws:
            body = " & ".join(f"E(y,{w})" for w in ws)
            typ.append(f"forall {' '.join(['y'] + ws)}. {letter}(y{args}) -> {body}")
    return {
        "rt": [f"forall y. {world.format(v='y')} -> R(y,y)",
               "forall y z w. (R(y,z) & R(z,w)) -> R(y,w)"],
        "mon": mon,
        "er": ["forall x. (exists y. E(x,y)) <-> ~(exists y. E(y,x))",
               "forall x y. R(x,y) -> (exists z w. E(x,z) & E(y,w))"],
        "type_ok": typ,
        "cd": [f"forall x. (exists y. E(y,x)) -> (forall y. {world.format(v='y')} -> E(y,x))"],
        "rt_unrelativized": ["forall y. R(y,y)",
                             "forall y z w. (R(y,z) & R(z,w)) -> R(y,w)"],
        "cd_unrelativized": ["forall x. (exists y. E(y,x)) -> (forall y. E(y,x))"],
    }


def _falsifier(model: FoModel, sentence: Formula) -> dict[str, str] | None:
    """Assignment to the leading universal block that falsifies the body, if any."""
    names = []
    body = sentence
    while isinstance(body, Forall):
        names.append(body.var)
        body = body.body
    for values in product(model.domain, repeat=len(names)):
        env = dict(zip(names, values))
        if not _eval(model, env, body):
            return env
    return None


def classify_model(M: FoModel) -> ModelClassReport:
    """Check the RT, Mon, ER, Type and CD axiom groups in ``M``."""
    results: dict[str, bool] = {}
    witnesses: dict[str, tuple[str, dict[str, str]]] = {}
    for group, texts in axiom_sentences(M.vocab).items():
        results[group] = True
        for text in texts:
            env = _falsifier(M, parse_fo(text, M.vocab))
            if env is not None:
                results[group] = False
                witnesses.setdefault(group, (text, env))
    return ModelClassReport(
        rt=results["rt"], mon=results["mon"], er=results["er"], type_ok=results["type_ok"],
        cd=results["cd"], witnesses=witnesses,
        rt_unrelativized=results["rt_unrelativized"], cd_unrelativized=results["cd_unrelativized"],
    )


def brute_force_axiom(M: FoModel, text: str) -> bool:
    """Evaluate one axiom sentence through the public evaluator."""
    return eval_fo(M, {}, parse_fo(text, M.vocab))
