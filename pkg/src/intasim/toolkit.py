"""Random test structures and the search and suite drivers built on them."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import asdict, dataclass, field
from itertools import chain, combinations, permutations, product

from .asimulation import (
    FULL,
    AsimRelation,
    PairState,
    QuotientState,
    asimulation_quotient_fixpoint,
    bounded_tuple_fixpoint,
    bounded_tuple_oracle,
    check_asimulation_quotient,
    check_k_asimulation,
    is_k_asimulation,
    k_asimulation_fixpoint,
    lift_to_k,
    max_asimulation_quotient,
    max_k_asimulation,
    other,
)
from .formulas import (
    BOTTOM,
    And,
    Atom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Vocabulary,
    degree,
    free_vars,
    letters,
    parse_int,
    prime,
    to_text,
)
from .semantics import (
    EvalPoint,
    FoModel,
    KripkeModel,
    default_object_vars,
    force,
    kripke_to_fo,
    satisfies_at,
)
from .theory import TheoryError, asimulation_from_theory, theory_order_asimulation
from .translation import standard_translation, translation_degree

DEFAULT_WEIGHTS = (("atom", 3), ("bot", 1), ("and", 2), ("or", 2), ("imp", 3), ("exists", 1), ("forall", 1))


@dataclass(frozen=True)
class GenConfig:
    max_domain: int = 3
    max_worlds: int = 3
    max_arity: int = 1
    density: float = 0.3
    depth: int = 3
    weights: tuple[tuple[str, int], ...] = DEFAULT_WEIGHTS
    seed: int = 0
    letters: tuple[tuple[str, int], ...] = (("P", 1), ("Q", 0))
    r_density: float | None = None
    e_density: float | None = None
    max_k: int = 3
    cases: int = 100
    scope: str = "reachable"

    def __post_init__(self):
        for name in ("max_domain", "max_worlds"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_arity < 0 or self.depth < 0 or self.max_k < 0 or self.cases < 0:
            raise ValueError("bounds must be non-negative")
        for d in (self.density, self.r_density, self.e_density):
            if d is not None and not 0 <= d <= 1:
                raise ValueError("densities must lie in [0, 1]")
        if self.scope not in ("full", "reachable"):
            raise ValueError(f"unknown scope {self.scope!r}")
        if not any(w > 0 for _, w in self.weights):
            raise ValueError("at least one connective weight must be positive")

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    @property
    def fo_vocab(self) -> Vocabulary:
        return Vocabulary({prime(p): a + 1 for p, a in self.letters})


# ---------------------------------------------------------------------------
# Fixtures


def m_minus() -> FoModel:
    return FoModel.build(["a"], {}, {"P'": 1})


def n_plus() -> FoModel:
    return FoModel.build(["c"], {"P'": [("c",)]}, {"P'": 1})


def k2(constant: bool = False) -> KripkeModel:
    """Two worlds u <= v; d2 exists only at v unless ``constant``."""
    return KripkeModel(
        worlds=("u", "v"),
        leq=frozenset({("u", "u"), ("u", "v"), ("v", "v")}),
        domains={"u": {"d1", "d2"} if constant else {"d1"}, "v": {"d1", "d2"}},
        val={"P": {"v": {("d1",)}}},
        arities={"P": 1},
    )


HAND_CORPUS = (
    "_|_",
    "Q",
    "P(w1)",
    "P(w1) -> Q",
    "Q -> P(w1)",
    "P(w1) | (P(w1) -> _|_)",
    "(Q -> _|_) -> _|_",
    "((P(w1) -> Q) -> P(w1)) -> P(w1)",
    "exists u. P(u)",
    "forall u. P(u)",
    "forall u. P(u) | Q",
    "(forall u. P(u) -> Q) -> Q",
    "exists u. P(u) -> forall v. P(v)",
    "forall u. (P(u) -> _|_) -> _|_",
    "(forall u. P(u)) -> exists u. P(u)",
    "exists u. P(u) & (P(w1) -> Q)",
)


def hand_corpus(arity_p: int = 1) -> list[Formula]:
    """Small fixed corpus over P (unary) and Q (0-ary); free variables among w1."""
    return [parse_int(t, {"P": arity_p, "Q": 0}) for t in HAND_CORPUS]


# ---------------------------------------------------------------------------
# Generators


def _names(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(n)]


def gen_fo_model(cfg: GenConfig, rng: random.Random | None = None,
                 elements: Sequence[str] | None = None) -> FoModel:
    rng = rng or cfg.rng()
    dom = list(elements) if elements is not None else _names("e", rng.randint(1, cfg.max_domain))
    vocab = cfg.fo_vocab
    rel = {}
    for name, arity in vocab.items():
        p = cfg.density
        if name == "R" and cfg.r_density is not None:
            p = cfg.r_density
        if name == "E" and cfg.e_density is not None:
            p = cfg.e_density
        rel[name] = [t for t in product(dom, repeat=arity) if rng.random() < p]
    return FoModel.build(dom, rel, vocab)


def gen_kripke(cfg: GenConfig, rng: random.Random | None = None) -> KripkeModel:
    """Random Kripke model, closed upward by construction."""
    rng = rng or cfg.rng()
    worlds = _names("w", rng.randint(1, cfg.max_worlds))
    pool = [f"d{i + 1}" for i in range(cfg.max_domain)]
    edges = {(u, v) for u in worlds for v in worlds if u == v or rng.random() < 0.4}
    changed = True
    while changed:
        extra = {(u, t) for u, v in edges for v2, t in edges if v == v2} - edges
        changed = bool(extra)
        edges |= extra
    below = {v: [u for u in worlds if (u, v) in edges] for v in worlds}
    seed_dom = {w: {d for d in pool if rng.random() < 0.5} or {rng.choice(pool)} for w in worlds}
    domains = {v: set().union(*(seed_dom[u] for u in below[v])) for v in worlds}
    val = {}
    for p, a in cfg.letters:
        base = {w: {t for t in product(sorted(domains[w]), repeat=a) if rng.random() < cfg.density}
                for w in worlds}
        val[p] = {v: set().union(*(base[u] for u in below[v])) for v in worlds}
    return KripkeModel(tuple(worlds), frozenset(edges), domains, val, dict(cfg.letters))


def gen_int_formula(cfg: GenConfig, rng: random.Random | None = None,
                    free: Sequence[str] = ("w1",)) -> Formula:
    """Random intuitionistic formula of depth at most ``cfg.depth``.

    Atom arguments come from ``free`` and the enclosing quantifiers.
    """
    rng = rng or cfg.rng()
    kinds, weights = zip(*cfg.weights)
    leaf_kinds = [(k, w) for k, w in cfg.weights if k in ("atom", "bot") and w > 0] or [("bot", 1)]

    def leaf(scope):
        kind = rng.choices([k for k, _ in leaf_kinds], [w for _, w in leaf_kinds])[0]
        usable = [(p, a) for p, a in cfg.letters if a == 0 or scope]
        if kind == "bot" or not usable:
            return BOTTOM
        p, a = rng.choice(usable)
        return Atom(p, tuple(rng.choice(scope) for _ in range(a)))

    def gen(d, scope):
        if d == 0:
            return leaf(scope)
        kind = rng.choices(kinds, weights)[0]
        if kind in ("atom", "bot"):
            return leaf(scope)
        if kind in ("and", "or", "imp"):
            ctor = {"and": And, "or": Or, "imp": Implies}[kind]
            return ctor(gen(d - 1, scope), gen(d - 1, scope))
        var = f"u{d}"
        ctor = Exists if kind == "exists" else Forall
        return ctor(var, gen(d - 1, scope + [var]))

    return gen(cfg.depth, list(free))


def corpus(n: int, count: int = 40, depth: int = 3, seed: int = 0,
           letters_: tuple[tuple[str, int], ...] = (("P", 1), ("Q", 0))) -> list[Formula]:
    """Hand-written formulas that fit arity ``n`` followed by ``count`` generated ones."""
    allowed = set(default_object_vars(n))
    out = []
    if dict(letters_) == {"P": 1, "Q": 0}:
        out = [f for f in hand_corpus() if set(free_vars(f)) <= allowed]
    cfg = GenConfig(depth=depth, seed=seed, letters=letters_)
    rng = cfg.rng()
    free = sorted(allowed)
    target = len(out) + count
    while len(out) < target:
        out.append(gen_int_formula(cfg, rng, free))
    return out


# ---------------------------------------------------------------------------
# Exhaustive model enumeration


def all_fo_models(domain: Sequence[str], vocab: Vocabulary) -> Iterator[FoModel]:
    """Every model on ``domain``; extra letters vary fastest, then R, then E."""
    names = [n for n in vocab.extra] + ["R", "E"]
    ground = [(n, t) for n in names for t in product(domain, repeat=vocab[n])]
    for mask in range(1 << len(ground)):
        rel = {n: [] for n in names}
        for i, (n, t) in enumerate(ground):
            if mask >> i & 1:
                rel[n].append(t)
        yield FoModel.build(domain, rel, vocab)


def model_signature(M: FoModel) -> tuple:
    """Canonical form up to renaming elements."""
    best = None
    for perm in permutations(range(len(M.domain))):
        ren = {M.domain[i]: str(perm[i]) for i in range(len(M.domain))}
        sig = tuple((n, tuple(sorted(tuple(ren[e] for e in t) for t in M.interp[n]))) for n in sorted(M.interp))
        if best is None or sig < best:
            best = sig
    return (len(M.domain), best)


def nonisomorphic_models(domain: Sequence[str], vocab: Vocabulary) -> list[FoModel]:
    seen = set()
    out = []
    for M in all_fo_models(domain, vocab):
        sig = model_signature(M)
        if sig not in seen:
            seen.add(sig)
            out.append(M)
    return out


def all_kripke_models(max_worlds: int, pool: Sequence[str], letters_: dict[str, int]) -> Iterator[KripkeModel]:
    """Every Kripke model with worlds w0.. (at most ``max_worlds``), domains from ``pool``."""
    subsets = [frozenset(s) for r in range(1, len(pool) + 1) for s in combinations(pool, r)]
    for nw in range(1, max_worlds + 1):
        worlds = _names("w", nw)
        pairs = [(u, v) for u in worlds for v in worlds if u != v]
        for mask in range(1 << len(pairs)):
            leq = {(w, w) for w in worlds} | {p for i, p in enumerate(pairs) if mask >> i & 1}
            if any((u, t) not in leq for u, v in leq for v2, t in leq if v == v2):
                continue
            for doms in product(subsets, repeat=nw):
                domains = dict(zip(worlds, doms))
                if any(not domains[u] <= domains[v] for u, v in leq):
                    continue
                yield from _valuations(worlds, leq, domains, letters_)


def _valuations(worlds, leq, domains, letters_):
    options = []
    for p, a in sorted(letters_.items()):
        per_world = []
        for w in worlds:
            tuples = list(product(sorted(domains[w]), repeat=a))
            per_world.append([frozenset(s) for r in range(len(tuples) + 1) for s in combinations(tuples, r)])
        options.append((p, per_world))
    choices = [c for _, pw in options for c in pw]
    for combo in product(*choices):
        val = {}
        i = 0
        for p, pw in options:
            val[p] = dict(zip(worlds, combo[i:i + len(pw)]))
            i += len(pw)
        if all(val[p][u] <= val[p][v] for p in val for u, v in leq):
            yield KripkeModel(tuple(worlds), frozenset(leq), domains, val, dict(letters_))


# ---------------------------------------------------------------------------
# Non-invariance witnesses


@dataclass(frozen=True, eq=False)
class Witness:
    left: EvalPoint
    right: EvalPoint
    relation: AsimRelation
    formula: Formula
    left_value: bool
    right_value: bool

    @property
    def k(self) -> int:
        return self.relation.k

    def replay(self) -> bool:
        """Recheck the verdict from the stored data alone."""
        return (satisfies_at(self.left, self.formula) == self.left_value is True
                and satisfies_at(self.right, self.formula) == self.right_value is False
                and self.relation.seed in self.relation.states
                and is_k_asimulation(self.relation))

    def to_json(self) -> dict:
        return {
            "formula": to_text(self.formula),
            "k": self.k,
            "left": {"model": self.left.model.to_json(), "world": self.left.world,
                     "objects": list(self.left.objects), "value": self.left_value},
            "right": {"model": self.right.model.to_json(), "world": self.right.world,
                      "objects": list(self.right.objects), "value": self.right_value},
            "relation": self.relation.to_json(),
        }


@dataclass
class SearchResult:
    witness: Witness | None
    cases: int


def _formula_arity(phi: Formula, x: str = "x") -> int:
    rest = [v for v in free_vars(phi) if v != x]
    n = len(rest)
    if set(rest) - set(default_object_vars(n)):
        raise ValueError(f"free variables must be {x} and w1..wn, got {free_vars(phi)}")
    return n


def _search_vocab(phi: Formula) -> Vocabulary:
    arities = letters(phi)
    return Vocabulary({n: a for n, a in arities.items() if n not in ("R", "E")})


def _shell_pairs(n_left: int, n_right: int) -> Iterator[tuple[int, int]]:
    """Index pairs ordered by max(i, j) so both sides vary early."""
    for s in range(max(n_left, n_right)):
        if s < n_right:
            for i in range(min(s, n_left)):
                yield i, s
        if s < n_left:
            for j in range(min(s + 1, n_right)):
                yield s, j


def _candidate_pairs(phi: Formula, bounds: GenConfig) -> Iterator[tuple[FoModel, FoModel]]:
    vocab = _search_vocab(phi)
    limit = min(2, bounds.max_domain)
    sizes = [(i, j) for i in range(1, limit + 1) for j in range(1, limit + 1)]
    for i, j in sorted(sizes, key=lambda p: (max(p), p)):
        lefts = list(all_fo_models("ab"[:i], vocab))
        rights = list(all_fo_models("cd"[:j], vocab))
        for li, ri in _shell_pairs(len(lefts), len(rights)):
            yield lefts[li], rights[ri]
    rng = bounds.rng()
    cfg = GenConfig(max_domain=bounds.max_domain, density=bounds.density, seed=bounds.seed,
                    r_density=bounds.r_density, e_density=bounds.e_density,
                    letters=tuple((n[:-1] if n.endswith("'") else n, a - 1) for n, a in vocab.extra.items()))
    while True:
        sz_l = rng.randint(1, bounds.max_domain)
        sz_r = rng.randint(1, bounds.max_domain)
        yield (_relabel(gen_fo_model(cfg, rng, _names("a", sz_l)), vocab),
               _relabel(gen_fo_model(cfg, rng, _names("c", sz_r)), vocab))


def _relabel(M: FoModel, vocab: Vocabulary) -> FoModel:
    rel = {n: M.interp.get(n, ()) for n in vocab}
    return FoModel.build(M.domain, rel, vocab)


def find_noninvariance_witness(phi: Formula, bounds: GenConfig, budget: int, x: str = "x",
                               scope: str = "full") -> SearchResult:
    """Look for points related by a k-asimulation (k = degree of ``phi``) that
    ``phi`` tells apart, left true and right false.

    Model pairs with at most two elements per side are enumerated first, then
    random pairs are drawn.  Each (pair, seed) combination is one case.  A
    ``None`` witness only means nothing was found within the budget.
    """
    n = _formula_arity(phi, x)
    k = degree(phi)
    cases = 0
    if budget <= 0:
        return SearchResult(None, 0)
    for M, N in _candidate_pairs(phi, bounds):
        left_pts = [EvalPoint(M, a, bs) for a in M.domain for bs in product(M.domain, repeat=n)]
        right_pts = [EvalPoint(N, c, ds) for c in N.domain for ds in product(N.domain, repeat=n)]
        right_vals = {}
        for p in left_pts:
            left_true = satisfies_at(p, phi, x)
            for q in right_pts:
                cases += 1
                if left_true:
                    if q not in right_vals:
                        right_vals[q] = satisfies_at(q, phi, x)
                    if not right_vals[q]:
                        rel = max_k_asimulation(p, q, k, FULL, scope)
                        if rel is not None:
                            return SearchResult(Witness(p, q, rel, phi, True, False), cases)
                if cases >= budget:
                    return SearchResult(None, cases)
    return SearchResult(None, cases)


# ---------------------------------------------------------------------------
# Property suites


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    skipped: int = 0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.cases > 0 and not self.failures

    def to_json(self) -> dict:
        out = asdict(self)
        out["failures"] = sorted(self.failures, key=repr)
        return out


def _point_json(pt: EvalPoint) -> dict:
    return {"model": pt.model.to_json(), "world": pt.world, "objects": list(pt.objects)}


def _random_pair(cfg: GenConfig, rng: random.Random, n: int) -> tuple[EvalPoint, EvalPoint]:
    """Random pointed pair; a third of the time the right model extends the left one."""
    M = gen_fo_model(cfg, rng, _names("a", rng.randint(1, cfg.max_domain)))
    mode = rng.randrange(3)
    if mode == 0:
        N = gen_fo_model(cfg, rng, _names("c", rng.randint(1, cfg.max_domain)))
    else:
        ren = {a: f"c{i}" for i, a in enumerate(M.domain)}
        rel = {}
        for name, rows in M.interp.items():
            moved = {tuple(ren[e] for e in t) for t in rows}
            if mode == 1 or name not in ("R", "E"):
                moved |= {t for t in product(ren.values(), repeat=M.vocab[name]) if rng.random() < 0.15}
            rel[name] = sorted(moved)
        N = FoModel.build(list(ren.values()), rel, M.vocab)
    p = EvalPoint(M, rng.choice(M.domain), tuple(rng.choice(M.domain) for _ in range(n)))
    q = EvalPoint(N, rng.choice(N.domain), tuple(rng.choice(N.domain) for _ in range(n)))
    return p, q


def suite_preservation(cfg: GenConfig, report: SuiteReport) -> None:
    rng = cfg.rng()
    formulas = {n: [(f, translation_degree(f), standard_translation(f)) for f in
                    corpus(n, 30, cfg.depth, cfg.seed, cfg.letters)]
                for n in range(cfg.max_arity + 1)}
    related = transfers = 0
    for _ in range(cfg.cases):
        n = rng.randint(0, cfg.max_arity)
        k = rng.randint(0, cfg.max_k)
        p, q = _random_pair(cfg, rng, n)
        report.cases += 1
        if max_k_asimulation(p, q, k, FULL, cfg.scope) is None:
            continue
        related += 1
        for f, deg, st in formulas[n]:
            if deg > k or not satisfies_at(p, st):
                continue
            transfers += 1
            if not satisfies_at(q, st):
                report.failures.append({"formula": to_text(f), "k": k, "left": _point_json(p),
                                        "right": _point_json(q)})
    report.notes["related_pairs"] = related
    report.notes["transfers_checked"] = transfers


def suite_degree(cfg: GenConfig, report: SuiteReport) -> None:
    rng = cfg.rng()
    for _ in range(cfg.cases):
        f = gen_int_formula(cfg, rng)
        report.cases += 1
        st = standard_translation(f)
        if translation_degree(f) != degree(st):
            report.failures.append({"formula": to_text(f), "expected": translation_degree(f),
                                    "got": degree(st)})


def suite_adequacy(cfg: GenConfig, report: SuiteReport) -> None:
    """Forcing agrees with the translation on the encoding, exhaustively."""
    pool = [f"d{i + 1}" for i in range(cfg.max_domain)]
    formulas = [(f, standard_translation(f), bool(free_vars(f)))
                for f in corpus(1, 24, cfg.depth, cfg.seed, cfg.letters)]
    for K in all_kripke_models(cfg.max_worlds, pool, dict(cfg.letters)):
        enc = kripke_to_fo(K)
        for w in K.worlds:
            for f, st, open_ in formulas:
                for d in (K.sorted_domain(w) if open_ else (None,)):
                    if report.cases >= cfg.cases:
                        return
                    report.cases += 1
                    env, objs = ({"w1": d}, (d,)) if open_ else ({}, ())
                    want = force(K, w, env, f)
                    got = satisfies_at(enc.point(w, objs), st)
                    if want != got:
                        report.failures.append({"formula": to_text(f), "model": K.to_json(),
                                                "world": w, "w1": d, "force": want})


def _attempts(cfg: GenConfig, report: SuiteReport) -> Iterator[int]:
    """Draw until ``cfg.cases`` cases qualify, giving up after 50 draws per case."""
    for i in range(50 * cfg.cases):
        if report.cases >= cfg.cases:
            return
        yield i


def suite_soundness(cfg: GenConfig, report: SuiteReport) -> None:
    rng = cfg.rng()
    for _ in _attempts(cfg, report):
        n = rng.randint(0, cfg.max_arity)
        k = rng.randint(0, cfg.max_k)
        p, q = _random_pair(cfg, rng, n)
        survivors, candidates = k_asimulation_fixpoint(p, q, k, FULL, cfg.scope)
        rel = AsimRelation(p, q, frozenset(survivors), k, FULL)
        if rel.seed not in survivors:
            report.skipped += 1
            continue
        report.cases += 1
        bad = check_k_asimulation(rel)
        if bad is not None:
            report.failures.append({"kind": "not an asimulation", "violation": str(bad)})
            continue
        deleted = sorted(candidates - survivors)
        for s in rng.sample(deleted, min(20, len(deleted))):
            if check_k_asimulation(rel.with_states(survivors | {s})) is None:
                report.failures.append({"kind": "not maximal", "state": list(s)})


def suite_lift(cfg: GenConfig, report: SuiteReport) -> None:
    rng = cfg.rng()
    for _ in _attempts(cfg, report):
        n = rng.randint(0, cfg.max_arity)
        p, q = _random_pair(cfg, rng, n)
        rel = max_asimulation_quotient(p, q)
        if rel is None:
            report.skipped += 1
            continue
        report.cases += 1
        for k in range(cfg.max_k + 1):
            bad = check_k_asimulation(lift_to_k(rel, k))
            if bad is not None:
                report.failures.append({"k": k, "violation": str(bad)})


def suite_theory(cfg: GenConfig, report: SuiteReport) -> None:
    rng = cfg.rng()
    for _ in _attempts(cfg, report):
        n = rng.randint(0, cfg.max_arity)
        k = rng.randint(0, cfg.max_k)
        p, q = _random_pair(cfg, rng, n)
        try:
            rel = asimulation_from_theory(p, q, k)
            quot = theory_order_asimulation(p, q)
        except TheoryError:
            report.skipped += 1
            continue
        report.cases += 1
        bad = check_k_asimulation(rel)
        if bad is not None:
            report.failures.append({"kind": "graded", "k": k, "violation": str(bad)})
        bad = check_asimulation_quotient(quot)
        if bad is not None:
            report.failures.append({"kind": "full", "violation": str(bad)})
        gfp, _ = asimulation_quotient_fixpoint(p, q)
        if set(quot.states) != gfp:
            report.failures.append({"kind": "differs from the greatest asimulation"})


def suite_quotient(cfg: GenConfig, report: SuiteReport, cap: int = 3) -> None:
    """Quotient fixpoint against the bounded tuple oracle on all small model pairs."""
    vocab = cfg.fo_vocab
    models = list(chain.from_iterable(
        nonisomorphic_models(_names("e", size), vocab) for size in range(1, min(2, cfg.max_domain) + 1)))
    for i, M in enumerate(models):
        for N in models[i:]:
            if report.cases >= cfg.cases:
                return
            compare_quotient_with_oracle(M, N, cap, report)


def compare_quotient_with_oracle(M: FoModel, N: FoModel, cap: int, report: SuiteReport) -> None:
    """Compare both fixpoints on every seed without objects, in both orientations."""
    N2 = _rename(N, "f") if M is N or set(M.domain) & set(N.domain) else N
    p0 = EvalPoint(M, M.domain[0])
    q0 = EvalPoint(N2, N2.domain[0])
    worlds = [(lt, a, c) for lt, left, right in (("M", M, N2), ("N", N2, M))
              for a in left.domain for c in right.domain]
    quot, _ = asimulation_quotient_fixpoint(
        p0, q0, "reachable", [QuotientState(lt, a, c, ()) for lt, a, c in worlds])
    oracle = bounded_tuple_fixpoint(p0, q0, cap, [PairState(lt, 0, a, (), c, ()) for lt, a, c in worlds])
    for lt, a, c in worlds:
        report.cases += 1
        got = QuotientState(lt, a, c, ()) in quot
        want = PairState(lt, 0, a, (), c, ()) in oracle
        if got != want:
            models = {"M": M, "N": N2}
            report.failures.append({"left": models[lt].to_json(), "right": models[other(lt)].to_json(),
                                    "world": [a, c], "quotient": got, "oracle": want})


def _rename(M: FoModel, prefix: str) -> FoModel:
    ren = {a: f"{prefix}{i}" for i, a in enumerate(M.domain)}
    rel = {n: [tuple(ren[e] for e in t) for t in rows] for n, rows in M.interp.items()}
    return FoModel.build(list(ren.values()), rel, M.vocab)


SUITES = {
    "preservation": suite_preservation,
    "degree": suite_degree,
    "adequacy": suite_adequacy,
    "soundness": suite_soundness,
    "lift": suite_lift,
    "theory": suite_theory,
    "quotient": suite_quotient,
}


def run_property_suite(name: str, cfg: GenConfig) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    report = SuiteReport(name)
    if cfg.cases > 0:
        SUITES[name](cfg, report)
    return report


__all__ = [
    "GenConfig",
    "SUITES",
    "SearchResult",
    "SuiteReport",
    "Witness",
    "all_fo_models",
    "all_kripke_models",
    "bounded_tuple_oracle",
    "corpus",
    "find_noninvariance_witness",
    "gen_fo_model",
    "gen_int_formula",
    "gen_kripke",
    "hand_corpus",
    "k2",
    "m_minus",
    "n_plus",
    "nonisomorphic_models",
    "run_property_suite",
]
