"""k-asimulations and asimulations between evaluation points of finite models.

A k-asimulation state is a ``PairState``: an orientation (which model is on
the left), the length ``m`` of the world history, the current worlds and the
two object tuples.  The step conditions only read the current worlds, the
tuples and ``m``, so the history entries themselves are never stored.

Two readings of the atom condition are supported:

``literal``
    only atoms ``P(x, w1, ..., wl)`` with the tuple in order and arity l+1.
``full``
    every atom ``P(x, w_i1, ..., w_ir)`` with arguments drawn from the tuple,
    repetitions allowed.  This is the reading under which every standard
    translation is preserved, and the one the set quotient needs.

Unparametrized asimulations are handled on a finite quotient: in ``full``
mode the conditions depend only on the two worlds and the *set* of object
pairs, and an extension step adds one pair to that set.
"""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Callable, Hashable, Iterable, Iterator
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from typing import NamedTuple

from .semantics import EvalPoint, FoModel

LITERAL = "literal"
FULL = "full"
ATOM_MODES = (LITERAL, FULL)
SCOPES = ("full", "reachable")


class AsimulationError(ValueError):
    pass


class MalformedRelationError(AsimulationError):
    pass


def other(tag: str) -> str:
    return "N" if tag == "M" else "M"


class PairState(NamedTuple):
    left_model: str
    hist_len: int
    left_world: str
    left_objects: tuple[str, ...]
    right_world: str
    right_objects: tuple[str, ...]

    @property
    def right_model(self) -> str:
        return other(self.left_model)

    def __str__(self) -> str:
        return (f"{self.left_model}:({self.hist_len}|{self.left_world};{','.join(self.left_objects)})"
                f" ~ {self.right_model}:({self.right_world};{','.join(self.right_objects)})")


class QuotientState(NamedTuple):
    left_model: str
    left_world: str
    right_world: str
    pairs: tuple[tuple[str, str], ...]

    @property
    def right_model(self) -> str:
        return other(self.left_model)

    def transposed(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted((d, b) for b, d in self.pairs))

    def __str__(self) -> str:
        body = ",".join(f"{b}/{d}" for b, d in self.pairs)
        return f"{self.left_model}:{self.left_world} ~ {self.right_model}:{self.right_world} {{{body}}}"


def add_pair(pairs: tuple[tuple[str, str], ...], pair: tuple[str, str]) -> tuple[tuple[str, str], ...]:
    if pair in pairs:
        return pairs
    return tuple(sorted(pairs + (pair,)))


@dataclass(frozen=True)
class ViolationReport:
    state: Hashable
    condition: str  # seed | atoms | R-step | E-step | RE-step
    detail: object

    def __str__(self) -> str:
        return f"{self.condition} fails at {self.state}: {self.detail}"


# ---------------------------------------------------------------------------
# Atom conditions


def shared_extra_letters(M: FoModel, N: FoModel) -> dict[str, int]:
    letters = dict(M.vocab.extra)
    for name, arity in N.vocab.extra.items():
        if letters.setdefault(name, arity) != arity:
            raise AsimulationError(f"letter {name!r} has different arities in the two models")
    return letters


def atom_failure(left: FoModel, a: str, bs: tuple[str, ...], right: FoModel, c: str,
                 ds: tuple[str, ...], mode: str = LITERAL):
    """First atom true at (a; bs) on the left but false at (c; ds) on the right."""
    return _atom_failure(shared_extra_letters(left, right), left, a, bs, right, c, ds, mode)


def _atom_failure(letters, left, a, bs, right, c, ds, mode):
    if mode == LITERAL:
        for name in letters:
            if letters[name] != len(bs) + 1:
                continue
            if (a,) + bs in left.interp.get(name, ()) and (c,) + ds not in right.interp.get(name, ()):
                return (name, (a,) + bs)
        return None
    if mode != FULL:
        raise AsimulationError(f"unknown atom mode {mode!r}")
    positions: dict[str, list[int]] = defaultdict(list)
    for i, b in enumerate(bs):
        positions[b].append(i)
    for name in letters:
        left_rows = left.facts_by_world.get(name, {}).get(a, ())
        if not left_rows:
            continue
        right_rows = right.facts_by_world.get(name, {}).get(c, frozenset())
        for rest in sorted(left_rows):
            if any(e not in positions for e in rest):
                continue
            for combo in product(*(positions[e] for e in rest)):
                if tuple(ds[i] for i in combo) not in right_rows:
                    return (name, (a,) + rest)
    return None


# ---------------------------------------------------------------------------
# Greatest fixpoint engine

Obligations = list[tuple[tuple[str, object], list[tuple[Hashable, ...]]]]


def greatest_fixpoint(candidates: Iterable[Hashable],
                      obligations: Callable[[Hashable], Obligations]) -> set:
    """Largest subset of ``candidates`` in which every obligation is met.

    An obligation is a list of alternatives; an alternative is a tuple of
    states that must all survive.  Deletions propagate through per-obligation
    counters of live alternatives, so each alternative is revisited at most
    once per deleted state.
    """
    alive = set(candidates)
    counts: dict[tuple, int] = {}
    alt_live: dict[tuple, bool] = {}
    watchers: dict[Hashable, list[tuple]] = defaultdict(list)
    queue: deque = deque()
    for s in alive:
        for ri, (_, alts) in enumerate(obligations(s)):
            live = 0
            for ai, alt in enumerate(alts):
                if all(t in alive for t in alt):
                    alt_live[(s, ri, ai)] = True
                    live += 1
                    for t in alt:
                        watchers[t].append((s, ri, ai))
            counts[(s, ri)] = live
            if live == 0:
                queue.append(s)
    dead = set()
    while queue:
        s = queue.popleft()
        if s in dead:
            continue
        dead.add(s)
        for owner, ri, ai in watchers.get(s, ()):
            if owner in dead or not alt_live[(owner, ri, ai)]:
                continue
            alt_live[(owner, ri, ai)] = False
            counts[(owner, ri)] -= 1
            if counts[(owner, ri)] == 0:
                queue.append(owner)
    return alive - dead


def naive_greatest_fixpoint(candidates: Iterable[Hashable],
                            obligations: Callable[[Hashable], Obligations]) -> set:
    """Same result as ``greatest_fixpoint`` by repeated full sweeps."""
    current = set(candidates)
    while True:
        keep = {s for s in current
                if all(any(all(t in current for t in alt) for alt in alts) for _, alts in obligations(s))}
        if keep == current:
            return current
        current = keep


def reachable(seed: Hashable, admissible: Callable[[Hashable], bool],
              obligations: Callable[[Hashable], Obligations], more_seeds: Iterable[Hashable] = ()) -> set:
    """States reachable from the seeds through admissible states' obligations.

    Obligations of these states only mention states of the same set, so the
    greatest fixpoint inside it agrees with the global one on its members.
    """
    seen = {seed, *more_seeds}
    queue = deque(sorted(seen))
    while queue:
        s = queue.popleft()
        if not admissible(s):
            continue
        for _, alts in obligations(s):
            for alt in alts:
                for t in alt:
                    if t not in seen:
                        seen.add(t)
                        queue.append(t)
    return seen


# ---------------------------------------------------------------------------
# Tuple-level machinery (k-asimulations and the bounded oracle)


class _TupleGame:
    """Step guards and atom checks shared by tuple-level computations.

    With ``bound`` set, the k-asimulation guards apply (``m + l < bound`` for
    R/E steps, ``m + l + 1 < bound`` for RE steps) and R steps grow the
    history.  With ``cap`` set instead, the guards are those of unparametrized
    asimulations truncated at tuple length ``cap``.
    """

    def __init__(self, M: FoModel, N: FoModel, atom_mode: str, bound: int | None = None,
                 cap: int | None = None):
        if atom_mode not in ATOM_MODES:
            raise AsimulationError(f"unknown atom mode {atom_mode!r}")
        self.letters = shared_extra_letters(M, N)
        self.models = {"M": M, "N": N}
        self.atom_mode = atom_mode
        self.bound = bound
        self.cap = cap
        self._atom_cache: dict = {}
        self._obligation_cache: dict = {}

    def atoms_ok(self, s: PairState) -> bool:
        return self.atom_detail(s) is None

    def atom_detail(self, s: PairState):
        key = (s.left_model, s.left_world, s.left_objects, s.right_world, s.right_objects)
        if key not in self._atom_cache:
            self._atom_cache[key] = _atom_failure(
                self.letters, self.models[s.left_model], s.left_world, s.left_objects,
                self.models[s.right_model], s.right_world, s.right_objects, self.atom_mode)
        return self._atom_cache[key]

    def guards(self, s: PairState) -> tuple[bool, bool]:
        l = len(s.left_objects)
        if self.bound is not None:
            return s.hist_len + l < self.bound, s.hist_len + l + 1 < self.bound
        return True, l < self.cap

    def obligations(self, s: PairState) -> Obligations:
        out = self._obligation_cache.get(s)
        if out is None:
            out = self._obligation_cache[s] = self._obligations(s)
        return out

    def _obligations(self, s: PairState) -> Obligations:
        lt, m, a, bs, c, ds = s
        rt = other(lt)
        alpha, beta = self.models[lt], self.models[rt]
        step, double = self.guards(s)
        grow = 1 if self.bound is not None else 0
        out: Obligations = []
        r_step = step
        e_step = step if self.bound is not None else len(bs) < self.cap
        if r_step:
            for c2 in beta.r_succ(c):
                alts = [(PairState(rt, m + grow, c2, ds, a2, bs), PairState(lt, m + grow, a2, bs, c2, ds))
                        for a2 in alpha.r_succ(a)]
                out.append((("R-step", c2), alts))
        if e_step:
            for b2 in alpha.e_succ(a):
                alts = [(PairState(lt, m, a, bs + (b2,), c, ds + (d2,)),) for d2 in beta.e_succ(c)]
                out.append((("E-step", b2), alts))
        if double:
            for c2 in beta.r_succ(c):
                for d2 in beta.e_succ(c2):
                    alts = [(PairState(lt, m + grow, a2, bs + (b2,), c2, ds + (d2,)),)
                            for a2 in alpha.r_succ(a) for b2 in alpha.e_succ(a2)]
                    out.append((("RE-step", (c2, d2)), alts))
        return out

    def all_states(self, n: int) -> Iterator[PairState]:
        limit = self.bound if self.bound is not None else self.cap
        for lt in ("M", "N"):
            alpha, beta = self.models[lt], self.models[other(lt)]
            for l in range(limit + 1):
                hists = range(limit - l + 1) if self.bound is not None else (0,)
                for bs in product(alpha.domain, repeat=l):
                    for ds in product(beta.domain, repeat=l):
                        for a in alpha.domain:
                            for c in beta.domain:
                                for m in hists:
                                    yield PairState(lt, m, a, bs, c, ds)

    def well_formed(self, s) -> str | None:
        if not isinstance(s, PairState) or s.left_model not in ("M", "N"):
            return "not a PairState"
        alpha, beta = self.models[s.left_model], self.models[s.right_model]
        if len(s.left_objects) != len(s.right_objects):
            return "object tuples differ in length"
        if s.hist_len < 0:
            return "negative history length"
        if s.left_world not in alpha.domain or not set(s.left_objects) <= set(alpha.domain):
            return "left element outside its model"
        if s.right_world not in beta.domain or not set(s.right_objects) <= set(beta.domain):
            return "right element outside its model"
        return None


def _state_violation(game, s, states: set) -> ViolationReport | None:
    detail = game.atom_detail(s)
    if detail is not None:
        return ViolationReport(s, "atoms", detail)
    for (condition, what), alts in game.obligations(s):
        if not any(all(t in states for t in alt) for alt in alts):
            return ViolationReport(s, condition, what)
    return None


def _seed(ptM: EvalPoint, ptN: EvalPoint) -> PairState:
    if ptM.arity != ptN.arity:
        raise AsimulationError(f"object tuples differ in length ({ptM.arity} vs {ptN.arity})")
    return PairState("M", 0, ptM.world, ptM.objects, ptN.world, ptN.objects)


@dataclass(frozen=True, eq=False)
class AsimRelation:
    """A set of pair states between two evaluation points, for a given k."""

    left: EvalPoint
    right: EvalPoint
    states: frozenset[PairState]
    k: int
    atom_mode: str = LITERAL

    @property
    def n(self) -> int:
        return self.left.arity

    @property
    def seed(self) -> PairState:
        return _seed(self.left, self.right)

    def __contains__(self, s) -> bool:
        return s in self.states

    def __len__(self) -> int:
        return len(self.states)

    def with_states(self, states: Iterable[PairState]) -> "AsimRelation":
        return AsimRelation(self.left, self.right, frozenset(states), self.k, self.atom_mode)

    def to_json(self) -> dict:
        return {
            "kind": "k-asimulation",
            "k": self.k,
            "n": self.n,
            "atom_mode": self.atom_mode,
            "seed": _state_json(self.seed),
            "states": [_state_json(s) for s in sorted(self.states)],
        }


def _state_json(s: PairState) -> list:
    return [s.left_model, s.hist_len, s.left_world, list(s.left_objects), s.right_world, list(s.right_objects)]


def _k_game(rel_or_pts, k: int, atom_mode: str) -> _TupleGame:
    left, right = rel_or_pts
    return _TupleGame(left.model, right.model, atom_mode, bound=left.arity + k)


def check_k_asimulation(rel: AsimRelation, k: int | None = None) -> ViolationReport | None:
    """First violated condition of a k-asimulation, or None when ``rel`` is one.

    States are examined in sorted order; within a state the atom condition
    comes first, then R, E and RE steps.
    """
    k = rel.k if k is None else k
    game = _k_game((rel.left, rel.right), k, rel.atom_mode)
    for s in rel.states:
        problem = game.well_formed(s)
        if problem:
            raise MalformedRelationError(f"{s}: {problem}")
    if rel.seed not in rel.states:
        return ViolationReport(rel.seed, "seed", "seed pair missing")
    states = set(rel.states)
    for s in sorted(states):
        report = _state_violation(game, s, states)
        if report:
            return report
    return None


def is_k_asimulation(rel: AsimRelation, k: int | None = None) -> bool:
    return check_k_asimulation(rel, k) is None


def replay(report: ViolationReport, rel) -> bool:
    """Re-run the reported condition on the reported state; True if it still fails."""
    if report.condition == "seed":
        return rel.seed not in rel.states
    if isinstance(rel, QuotientRelation):
        game = _QuotientGame(rel.left.model, rel.right.model)
    else:
        game = _k_game((rel.left, rel.right), rel.k, rel.atom_mode)
    if report.condition == "atoms":
        return game.atom_detail(report.state) is not None
    states = set(rel.states)
    for (condition, what), alts in game.obligations(report.state):
        if condition == report.condition and what == report.detail:
            return not any(all(t in states for t in alt) for alt in alts)
    return False


def k_asimulation_fixpoint(ptM: EvalPoint, ptN: EvalPoint, k: int, atom_mode: str = LITERAL,
                           scope: str = "full") -> tuple[set, set]:
    """Run the fixpoint; return ``(survivors, candidates)``.

    ``candidates`` are the states satisfying the atom condition in the chosen
    scope: every state with ``m + l <= n + k`` ("full") or those reachable
    from the seed through step obligations ("reachable").
    """
    if scope not in SCOPES:
        raise AsimulationError(f"unknown scope {scope!r}")
    seed = _seed(ptM, ptN)
    game = _k_game((ptM, ptN), k, atom_mode)
    if scope == "full":
        candidates = {s for s in game.all_states(ptM.arity) if game.atoms_ok(s)}
    else:
        candidates = {s for s in reachable(seed, game.atoms_ok, game.obligations) if game.atoms_ok(s)}
    return greatest_fixpoint(candidates, game.obligations), candidates


def max_k_asimulation(ptM: EvalPoint, ptN: EvalPoint, k: int, atom_mode: str = LITERAL,
                      scope: str = "full") -> AsimRelation | None:
    """Greatest k-asimulation between the points, or None if there is none.

    With ``scope="full"`` this is the union of all k-asimulations.  With
    ``scope="reachable"`` it is the greatest one among states generated from
    the seed, which exists under exactly the same conditions and is much
    smaller on larger models.
    """
    survivors, _ = k_asimulation_fixpoint(ptM, ptN, k, atom_mode, scope)
    if _seed(ptM, ptN) not in survivors:
        return None
    return AsimRelation(ptM, ptN, frozenset(survivors), k, atom_mode)


def bounded_tuple_oracle(ptM: EvalPoint, ptN: EvalPoint, cap: int) -> frozenset[PairState] | None:
    """Brute-force tuple-level asimulation truncated at tuple length ``cap``.

    Works on object tuples rather than sets of pairs: every tuple state up to
    the cap is enumerated, the full-atom ones are kept and violators are
    deleted until nothing changes.  Extension steps from tuples of length
    ``cap`` are not required.  Returns the surviving relation when it
    contains the seed.
    """
    survivors = bounded_tuple_fixpoint(ptM, ptN, cap)
    return frozenset(survivors) if _seed(ptM, ptN) in survivors else None


def bounded_tuple_fixpoint(ptM: EvalPoint, ptN: EvalPoint, cap: int,
                           seeds: Iterable[PairState] | None = None) -> set[PairState]:
    """Surviving tuple states of the truncated game.

    Without ``seeds`` every state up to the cap is considered; otherwise only
    those reachable from the given seeds.
    """
    _seed(ptM, ptN)
    game = _TupleGame(ptM.model, ptN.model, FULL, cap=cap)
    if seeds is None:
        pool = game.all_states(ptM.arity)
    else:
        first, *rest = sorted(seeds)
        pool = reachable(first, game.atoms_ok, game.obligations, rest)
    return greatest_fixpoint({s for s in pool if game.atoms_ok(s)}, game.obligations)


# ---------------------------------------------------------------------------
# Quotient machinery (unparametrized asimulations, full-atom mode)


class _QuotientGame:
    def __init__(self, M: FoModel, N: FoModel):
        self.letters = shared_extra_letters(M, N)
        self.models = {"M": M, "N": N}
        self._atom_cache: dict = {}
        self._obligation_cache: dict = {}

    def atom_detail(self, q: QuotientState):
        if q not in self._atom_cache:
            bs = tuple(b for b, _ in q.pairs)
            ds = tuple(d for _, d in q.pairs)
            self._atom_cache[q] = _atom_failure(self.letters, self.models[q.left_model], q.left_world, bs,
                                                self.models[q.right_model], q.right_world, ds, FULL)
        return self._atom_cache[q]

    def atoms_ok(self, q: QuotientState) -> bool:
        return self.atom_detail(q) is None

    def obligations(self, q: QuotientState) -> Obligations:
        out = self._obligation_cache.get(q)
        if out is None:
            out = self._obligation_cache[q] = self._obligations(q)
        return out

    def _obligations(self, q: QuotientState) -> Obligations:
        lt, a, c, pairs = q
        rt = other(lt)
        alpha, beta = self.models[lt], self.models[rt]
        flipped = q.transposed()
        out: Obligations = []
        for c2 in beta.r_succ(c):
            alts = [(QuotientState(rt, c2, a2, flipped), QuotientState(lt, a2, c2, pairs))
                    for a2 in alpha.r_succ(a)]
            out.append((("R-step", c2), alts))
        for b2 in alpha.e_succ(a):
            alts = [(QuotientState(lt, a, c, add_pair(pairs, (b2, d2))),) for d2 in beta.e_succ(c)]
            out.append((("E-step", b2), alts))
        for c2 in beta.r_succ(c):
            for d2 in beta.e_succ(c2):
                alts = [(QuotientState(lt, a2, c2, add_pair(pairs, (b2, d2))),)
                        for a2 in alpha.r_succ(a) for b2 in alpha.e_succ(a2)]
                out.append((("RE-step", (c2, d2)), alts))
        return out

    def all_states(self) -> Iterator[QuotientState]:
        for lt in ("M", "N"):
            alpha, beta = self.models[lt], self.models[other(lt)]
            grid = [(b, d) for b in alpha.domain for d in beta.domain]
            subsets = chain.from_iterable(combinations(grid, r) for r in range(len(grid) + 1))
            for sub in subsets:
                pairs = tuple(sorted(sub))
                for a in alpha.domain:
                    for c in beta.domain:
                        yield QuotientState(lt, a, c, pairs)

    def well_formed(self, q) -> str | None:
        if not isinstance(q, QuotientState) or q.left_model not in ("M", "N"):
            return "not a QuotientState"
        alpha, beta = self.models[q.left_model], self.models[q.right_model]
        if q.left_world not in alpha.domain or q.right_world not in beta.domain:
            return "world outside its model"
        if any(b not in alpha.domain or d not in beta.domain for b, d in q.pairs):
            return "object pair outside the models"
        if list(q.pairs) != sorted(set(q.pairs)):
            return "pairs must be sorted and distinct"
        return None


def quotient_seed(ptM: EvalPoint, ptN: EvalPoint) -> QuotientState:
    if ptM.arity != ptN.arity:
        raise AsimulationError(f"object tuples differ in length ({ptM.arity} vs {ptN.arity})")
    return QuotientState("M", ptM.world, ptN.world, tuple(sorted(set(zip(ptM.objects, ptN.objects)))))


@dataclass(frozen=True, eq=False)
class QuotientRelation:
    """An asimulation presented on (world, world, set of object pairs) states."""

    left: EvalPoint
    right: EvalPoint
    states: frozenset[QuotientState]
    info: dict = field(default_factory=dict, compare=False)

    @property
    def seed(self) -> QuotientState:
        return quotient_seed(self.left, self.right)

    def __contains__(self, q) -> bool:
        return q in self.states

    def __len__(self) -> int:
        return len(self.states)

    def relates(self, lt: str, a: str, bs, c: str, ds) -> bool:
        """Whether the tuple pair ``(a; bs)``, ``(c; ds)`` belongs to the induced relation."""
        return QuotientState(lt, a, c, tuple(sorted(set(zip(bs, ds))))) in self.states

    def to_json(self) -> dict:
        return {
            "kind": "asimulation-quotient",
            "seed": [self.seed.left_model, self.seed.left_world, self.seed.right_world,
                     [list(p) for p in self.seed.pairs]],
            "states": [[q.left_model, q.left_world, q.right_world, [list(p) for p in q.pairs]]
                       for q in sorted(self.states)],
            **({"info": self.info} if self.info else {}),
        }


def check_asimulation_quotient(rel: QuotientRelation) -> ViolationReport | None:
    """First violated asimulation condition on the quotient, or None."""
    game = _QuotientGame(rel.left.model, rel.right.model)
    for q in rel.states:
        problem = game.well_formed(q)
        if problem:
            raise MalformedRelationError(f"{q}: {problem}")
    if rel.seed not in rel.states:
        return ViolationReport(rel.seed, "seed", "seed pair missing")
    states = set(rel.states)
    for q in sorted(states):
        report = _state_violation(game, q, states)
        if report:
            return report
    return None


def is_asimulation_quotient(rel: QuotientRelation) -> bool:
    return check_asimulation_quotient(rel) is None


def asimulation_quotient_fixpoint(ptM: EvalPoint, ptN: EvalPoint, scope: str = "full",
                                  seeds: Iterable[QuotientState] = ()) -> tuple[set, set]:
    """Run the quotient fixpoint; return ``(survivors, candidates)``.

    With ``scope="reachable"`` the candidates are generated from the seed of
    the two points plus any extra ``seeds``.
    """
    if scope not in SCOPES:
        raise AsimulationError(f"unknown scope {scope!r}")
    game = _QuotientGame(ptM.model, ptN.model)
    seed = quotient_seed(ptM, ptN)
    if scope == "full":
        candidates = {q for q in game.all_states() if game.atoms_ok(q)}
    else:
        candidates = {q for q in reachable(seed, game.atoms_ok, game.obligations, seeds) if game.atoms_ok(q)}
    return greatest_fixpoint(candidates, game.obligations), candidates


def max_asimulation_quotient(ptM: EvalPoint, ptN: EvalPoint, scope: str = "full") -> QuotientRelation | None:
    """Greatest asimulation (as a quotient relation) between the points, or None."""
    survivors, _ = asimulation_quotient_fixpoint(ptM, ptN, scope)
    if quotient_seed(ptM, ptN) not in survivors:
        return None
    return QuotientRelation(ptM, ptN, frozenset(survivors))


def quotient_reachable_states(ptM: EvalPoint, ptN: EvalPoint) -> set[QuotientState]:
    """Every quotient state reachable from the seed, ignoring atoms."""
    game = _QuotientGame(ptM.model, ptN.model)
    return reachable(quotient_seed(ptM, ptN), lambda q: True, game.obligations)


def _covering_sequences(pairs: tuple[tuple[str, str], ...], length: int):
    """Sequences of the given length using exactly the pairs in ``pairs``."""
    if length < len(pairs):
        return
    if not pairs:
        if length == 0:
            yield ()
        return
    need = set(pairs)
    for seq in product(pairs, repeat=length):
        if set(seq) == need:
            yield seq


def lift_to_k(rel: QuotientRelation, k: int) -> AsimRelation:
    """Expand a quotient asimulation into a k-asimulation.

    Every tuple state whose pair set lies in ``rel`` is included, for every
    history length, up to ``m + l <= n + k``.
    """
    report = check_asimulation_quotient(rel)
    if report is not None:
        raise AsimulationError(f"not an asimulation: {report}")
    bound = rel.left.arity + k
    states = set()
    for q in rel.states:
        for l in range(len(q.pairs), bound + 1):
            for seq in _covering_sequences(q.pairs, l):
                bs = tuple(b for b, _ in seq)
                ds = tuple(d for _, d in seq)
                for m in range(bound - l + 1):
                    states.add(PairState(q.left_model, m, q.left_world, bs, q.right_world, ds))
    return AsimRelation(rel.left, rel.right, frozenset(states), k, FULL)
