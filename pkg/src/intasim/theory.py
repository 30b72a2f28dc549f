"""Translation-definable predicates on a pair of finite models.

A semantic value is the set of evaluation points of arity ``l`` (across both
models) where some intuitionistic formula with free variables among
``w1..wl`` has a true standard translation.  Values are Python ints used as
bitsets over the joint point space: the block of model M comes first, then
the block of N, and inside a block the point ``(a; b1..bl)`` sits at
``index(a) * D**l + index(b1..bl)`` with ``b1`` most significant.

Grades follow ``translation_degree``: connectives ``&``/``|`` keep the grade,
``->`` and ``exists`` add one, ``forall`` adds two.  Computing arity ``l`` at
grade ``g`` needs arity ``l+1`` at grade ``g-1``, so a family with budget
``T`` is exact on every cell with ``l + g <= T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .asimulation import (
    FULL,
    LITERAL,
    AsimRelation,
    PairState,
    QuotientRelation,
    _QuotientGame,
    _state_violation,
    other,
    quotient_seed,
    shared_extra_letters,
)
from .formulas import BOTTOM, And, Atom, Exists, Forall, Formula, Implies, Or, conj, to_text
from .semantics import EvalPoint, FoModel
from .translation import standard_translation

DEFAULT_CAP = 2 ** 16
DEFAULT_CELL_CAP = 2 ** 25


class TheoryError(ValueError):
    pass


class FamilyCapError(TheoryError):
    pass


class FamilyTooSmallError(TheoryError):
    pass


class _Rec:
    """Witness formula with its node count; the printed text is computed on demand."""

    __slots__ = ("size", "formula", "grade", "_text")

    def __init__(self, size_: int, formula: Formula, grade: int):
        self.size = size_
        self.formula = formula
        self.grade = grade
        self._text = None

    @property
    def text(self) -> str:
        if self._text is None:
            self._text = to_text(self.formula)
        return self._text


def _better(size_: int, make, old: _Rec | None, grade: int) -> _Rec | None:
    """New record if (size, text) beats ``old``; None otherwise."""
    if old is not None and size_ > old.size:
        return None
    rec = _Rec(size_, make(), grade)
    if old is None or size_ < old.size or rec.text < old.text:
        return rec
    return None


@dataclass(frozen=True)
class SemanticValue:
    arity: int
    bits: int
    witness: Formula
    grade: int
    family: "DefinableFamily" = field(repr=False, compare=False)

    def members(self) -> list[tuple[str, str, tuple[str, ...]]]:
        return [self.family.point_at(self.arity, i) for i in range(self.family.n_points(self.arity))
                if self.bits >> i & 1]

    def __contains__(self, pt) -> bool:
        return bool(self.bits >> self.family.index(pt) & 1)


class _Side:
    """Per-model tables for one block of the joint point space."""

    def __init__(self, model: FoModel):
        self.model = model
        self.elems = list(model.domain)
        self.pos = {e: i for i, e in enumerate(self.elems)}
        D = self.D = len(self.elems)
        self.R = np.zeros((D, D), dtype=np.float32)
        self.E = np.zeros((D, D), dtype=bool)
        for a, b in model.interp["R"]:
            self.R[self.pos[a], self.pos[b]] = 1
        for a, b in model.interp["E"]:
            self.E[self.pos[a], self.pos[b]] = True

    def block(self, l: int) -> int:
        return self.D ** (l + 1)


def _atom_choices(l: int, letters: dict[str, int], atom_mode: str):
    for letter, arity in letters.items():
        r = arity - 1
        if atom_mode == LITERAL:
            choices = [tuple(range(l))] if r == l else []
        else:
            choices = list(product(range(l), repeat=r))
        for idx in choices:
            yield letter, idx


def atom_formulas(l: int, letters: dict[str, int], atom_mode: str = FULL) -> list[Formula]:
    """Atomic formulas over ``w1..wl``, in the order used by ``atom_table``."""
    return [Atom(letter[:-1], tuple(f"w{i + 1}" for i in idx))
            for letter, idx in _atom_choices(l, letters, atom_mode)]


def atom_table(side: _Side, l: int, letters: dict[str, int], atom_mode: str = FULL) -> np.ndarray:
    """Truth of each atomic formula at each arity-l point of one model."""
    grid = np.indices((side.D,) * (l + 1)).reshape(l + 1, -1)
    rows = []
    dense = {}
    for letter, idx in _atom_choices(l, letters, atom_mode):
        if letter not in dense:
            table = np.zeros((side.D,) * letters[letter], dtype=bool)
            for row in side.model.interp[letter]:
                table[tuple(side.pos[e] for e in row)] = True
            dense[letter] = table
        rows.append(dense[letter][(grid[0],) + tuple(grid[1 + i] for i in idx)])
    return np.array(rows, dtype=bool).reshape(len(rows), side.D ** (l + 1))


def _check_letters(M: FoModel, N: FoModel) -> dict[str, int]:
    letters = shared_extra_letters(M, N)
    for name in letters:
        if not name.endswith("'"):
            raise TheoryError(f"letter {name!r} is not the translation of an intuitionistic letter")
    return dict(sorted(letters.items()))


class DefinableFamily:
    """Graded values over two models, built lazily over a growing budget."""

    def __init__(self, M: FoModel, N: FoModel, atom_mode: str = FULL, cap: int = DEFAULT_CAP):
        if atom_mode not in (LITERAL, FULL):
            raise TheoryError(f"unknown atom mode {atom_mode!r}")
        self.letters = _check_letters(M, N)
        self.M, self.N = M, N
        self.sides = (_Side(M), _Side(N))
        self.atom_mode = atom_mode
        self.cap = cap
        self.budget = -1
        self._cells: dict[tuple[int, int], dict[int, _Rec]] = {}
        self._leq: dict[tuple[int, int], np.ndarray] = {}

    # -- point space

    def n_points(self, l: int) -> int:
        return sum(s.block(l) for s in self.sides)

    def _side_of(self, pt: EvalPoint) -> int:
        if pt.model is self.M:
            return 0
        if pt.model is self.N:
            return 1
        raise TheoryError("point does not belong to either model of the family")

    def index(self, pt: EvalPoint | tuple) -> int:
        if isinstance(pt, EvalPoint):
            side, world, objs = self._side_of(pt), pt.world, pt.objects
        else:
            tag, world, objs = pt
            side = 0 if tag == "M" else 1
        s = self.sides[side]
        i = s.pos[world]
        for o in objs:
            i = i * s.D + s.pos[o]
        return i + (self.sides[0].block(len(objs)) if side else 0)

    def point_at(self, l: int, i: int) -> tuple[str, str, tuple[str, ...]]:
        side = 0
        if i >= self.sides[0].block(l):
            i -= self.sides[0].block(l)
            side = 1
        s = self.sides[side]
        digits = []
        for _ in range(l + 1):
            i, r = divmod(i, s.D)
            digits.append(s.elems[r])
        digits.reverse()
        return ("MN"[side], digits[0], tuple(digits[1:]))

    # -- int <-> array conversion

    def _to_array(self, values: list[int], l: int) -> np.ndarray:
        n = self.n_points(l)
        nbytes = (n + 7) // 8
        if not values:
            return np.zeros((0, n), dtype=bool)
        raw = np.frombuffer(b"".join(v.to_bytes(nbytes, "little") for v in values), dtype=np.uint8)
        bits = np.unpackbits(raw.reshape(len(values), nbytes), axis=1, bitorder="little")
        return bits[:, :n].astype(bool)

    @staticmethod
    def _to_ints(arr: np.ndarray) -> list[int]:
        packed = np.packbits(arr, axis=1, bitorder="little")
        return [int.from_bytes(row.tobytes(), "little") for row in packed]

    def _split(self, arr: np.ndarray, l: int) -> list[np.ndarray]:
        cut = self.sides[0].block(l)
        return [arr[:, :cut], arr[:, cut:]]

    # -- semantic operations (vectorized over many values)

    def _implications(self, bads: list[int], l: int) -> list[int]:
        arr = self._to_array(bads, l)
        parts = []
        for s, blk in zip(self.sides, self._split(arr, l)):
            bad = blk.reshape(len(bads), s.D, -1).astype(np.float32)
            parts.append(~(np.matmul(s.R, bad) > 0).reshape(len(bads), -1))
        return self._to_ints(np.concatenate(parts, axis=1))

    def _projections(self, values: list[int], l: int, universal: bool) -> list[int]:
        """``exists w_{l+1}`` (E-guarded) or ``forall w_{l+1}`` (R-then-E guarded) of arity-(l+1) values."""
        arr = self._to_array(values, l + 1)
        parts = []
        for s, blk in zip(self.sides, self._split(arr, l + 1)):
            v = blk.reshape(len(values), s.D, -1, s.D)
            E = s.E[None, :, None, :]
            if universal:
                bad = (~v & E).any(axis=3).astype(np.float32)
                parts.append(~(np.matmul(s.R, bad) > 0).reshape(len(values), -1))
            else:
                parts.append((v & E).any(axis=3).reshape(len(values), -1))
        return self._to_ints(np.concatenate(parts, axis=1))

    def _atoms(self, l: int) -> dict[int, _Rec]:
        out: dict[int, _Rec] = {}
        tables = [atom_table(side, l, self.letters, self.atom_mode) for side in self.sides]
        for i, formula in enumerate(atom_formulas(l, self.letters, self.atom_mode)):
            row = np.concatenate([t[i] for t in tables])
            bits = self._to_ints(row[None, :])[0]
            rec = _better(1, lambda f=formula: f, out.get(bits), 0)
            if rec:
                out[bits] = rec
        return out

    # -- construction

    def _close(self, cell: dict[int, _Rec], fresh: dict[int, _Rec], grade: int) -> None:
        """Add ``fresh`` to ``cell`` and close under intersection and union."""
        frontier = {v: r for v, r in fresh.items() if v not in cell}
        cell.update(frontier)
        while frontier:
            if len(cell) > self.cap:
                raise FamilyCapError(f"more than {self.cap} values")
            found: dict[int, _Rec] = {}
            current = list(cell.items())
            for x in sorted(frontier):
                rx = cell[x]
                for y, ry in current:
                    if x == y:
                        continue
                    for z, ctor in ((x & y, And), (x | y, Or)):
                        if z in cell:
                            continue
                        rec = _better(rx.size + ry.size + 1,
                                      lambda c=ctor, a=rx.formula, b=ry.formula: c(a, b),
                                      found.get(z), grade)
                        if rec:
                            found[z] = rec
            cell.update(found)
            frontier = found
        if len(cell) > self.cap:
            raise FamilyCapError(f"more than {self.cap} values")

    def _build(self, l: int, g: int) -> None:
        if g == 0:
            cell: dict[int, _Rec] = {}
            self._close(cell, {0: _Rec(1, BOTTOM, 0), **self._atoms(l)}, 0)
            self._cells[(l, 0)] = cell
            return
        prev = self._cells[(l, g - 1)]
        cell = dict(prev)
        fresh: dict[int, _Rec] = {}

        def offer(bits, size_, make):
            if bits in cell:
                return
            rec = _better(size_, make, fresh.get(bits), g)
            if rec:
                fresh[bits] = rec

        keys = sorted(prev)
        by_bad: dict[int, tuple[int, int, int]] = {}
        for x in keys:
            for y in keys:
                bad = x & ~y
                s_ = prev[x].size + prev[y].size + 1
                best = by_bad.get(bad)
                if best is None or s_ < best[0]:
                    by_bad[bad] = (s_, x, y)
                elif s_ == best[0]:
                    by_bad[bad] = min(best, (s_, x, y), key=lambda t: to_text(
                        Implies(prev[t[1]].formula, prev[t[2]].formula)))
        bads = sorted(by_bad)
        for bits, bad in zip(self._implications(bads, l), bads):
            s_, x, y = by_bad[bad]
            offer(bits, s_, lambda a=prev[x].formula, b=prev[y].formula: Implies(a, b))
        var = f"w{l + 1}"
        for grade_src, universal, ctor in ((g - 1, False, Exists), (g - 2, True, Forall)):
            if grade_src < 0:
                continue
            src = self._cells[(l + 1, grade_src)]
            keys = sorted(src)
            for bits, v in zip(self._projections(keys, l, universal), keys):
                offer(bits, src[v].size + 1, lambda f=src[v].formula, c=ctor: c(var, f))
        self._close(cell, fresh, g)
        self._cells[(l, g)] = cell

    def extend(self, budget: int) -> "DefinableFamily":
        """Make every cell with ``l + g <= budget`` available."""
        for T in range(self.budget + 1, budget + 1):
            for g in range(T + 1):
                self._build(T - g, g)
            self.budget = T
        return self

    def values(self, l: int, g: int) -> dict[int, _Rec]:
        if l + g > self.budget:
            raise FamilyTooSmallError(f"family budget {self.budget} does not cover arity {l}, grade {g}")
        return self._cells[(l, g)]

    def semantic_values(self, l: int, g: int) -> list[SemanticValue]:
        cell = self.values(l, g)
        return [SemanticValue(l, v, r.formula, r.grade, self) for v, r in sorted(cell.items())]

    def witness(self, l: int, g: int, bits: int) -> Formula | None:
        rec = self.values(l, g).get(bits)
        return rec.formula if rec else None

    # -- orders

    def leq_matrix(self, l: int, g: int) -> np.ndarray:
        """``out[p, q]``: every grade-g value containing point p contains q."""
        key = (l, g)
        if key not in self._leq:
            A = self._to_array(sorted(self.values(l, g)), l).astype(np.float32)
            bad = A.T @ (1 - A) > 0
            self._leq[key] = ~bad
        return self._leq[key]

    def leq(self, p, q, g: int) -> bool:
        l = len(p[2]) if isinstance(p, tuple) else p.arity
        return bool(self.leq_matrix(l, g)[self.index(p), self.index(q)])

    def meet(self, pt, g: int) -> int:
        """Intersection of the grade-g values containing ``pt``."""
        l = len(pt[2]) if isinstance(pt, tuple) else pt.arity
        row = self.leq_matrix(l, g)[self.index(pt)]
        return self._to_ints(row[None, :])[0]

    def saturation_grade(self, L: int, max_grade: int = 16) -> int:
        """First grade g whose values stay the same for two more grades, at every arity up to L."""
        for g in range(max_grade + 1):
            self.extend(L + g + 2)
            if all(self._cells[(l, g)].keys() == self._cells[(l, g + 1)].keys() == self._cells[(l, g + 2)].keys()
                   for l in range(L + 1)):
                return g
        raise TheoryError(f"no saturation up to grade {max_grade}")


def definable_family(M: FoModel, N: FoModel, L: int, k: int, atom_mode: str = FULL,
                     cap: int = DEFAULT_CAP) -> DefinableFamily:
    """Family exact for every arity up to ``L`` and grade up to ``k``."""
    return DefinableFamily(M, N, atom_mode, cap).extend(L + k)


def theory_leq(ptL: EvalPoint, ptR: EvalPoint, k: int, family: DefinableFamily) -> bool:
    """Whether every grade-k value containing ``ptL`` contains ``ptR``."""
    if ptL.arity != ptR.arity:
        raise TheoryError("points have different arities")
    return family.leq(ptL, ptR, k)


def complete_conjunction(pt: EvalPoint, k: int, family: DefinableFamily, x: str = "x") -> Formula:
    """Translation of the conjunction of witnesses of all grade-k values containing ``pt``.

    Relative to the two models, it defines the meet of those values.  With no
    such value the conjunction is the trivially true ``_|_ -> _|_``.
    """
    i = family.index(pt)
    recs = sorted((r for v, r in family.values(pt.arity, k).items() if v >> i & 1),
                  key=lambda r: (r.size, r.text))
    body = conj([r.formula for r in recs]) if recs else Implies(BOTTOM, BOTTOM)
    return standard_translation(body, x)


class GradedOrders:
    """Graded theory-inclusion orders computed without listing values.

    For ``g >= 1`` the grade-g values at arity ``l`` are exactly the upsets of
    the grade-g inclusion order, and at grade 0 they are the upsets inside
    the union of the atoms.  So each value-building step turns into a
    condition on lower orders:

    * implications: every R-successor of the right point covered at grade g
      has an R-successor of the left point equivalent to it at grade g;
    * ``exists``: every covered E-extension of the left point lies below
      some E-extension of the right point, at grade g and arity ``l+1``;
    * ``forall``: every R-then-E extension of the right point lies above some
      R-then-E extension of the left point, at grade ``g-1``.

    Only pairs across the two models are stored, one boolean array per
    orientation with rows for left points and columns for right points.
    """

    def __init__(self, M: FoModel, N: FoModel, atom_mode: str = FULL, cell_cap: int = DEFAULT_CELL_CAP):
        if atom_mode not in (LITERAL, FULL):
            raise TheoryError(f"unknown atom mode {atom_mode!r}")
        self.letters = _check_letters(M, N)
        self.cell_cap = cell_cap
        self.M, self.N = M, N
        self.sides = {"M": _Side(M), "N": _Side(N)}
        self.atom_mode = atom_mode
        self.budget = -1
        self._cells: dict[tuple[int, int, str], np.ndarray] = {}
        self._covers: dict[tuple[int, str], np.ndarray] = {}
        self._atoms: dict[tuple[int, str], np.ndarray] = {}

    def _atom_rows(self, l: int, tag: str) -> np.ndarray:
        key = (l, tag)
        if key not in self._atoms:
            self._atoms[key] = atom_table(self.sides[tag], l, self.letters, self.atom_mode)
        return self._atoms[key]

    def cover(self, l: int, g: int, tag: str) -> np.ndarray:
        """Points of one model lying in some grade-g value."""
        side = self.sides[tag]
        if g >= 1:
            return np.ones(side.D ** (l + 1), dtype=bool)
        key = (l, tag)
        if key not in self._covers:
            self._covers[key] = self._atom_rows(l, tag).any(axis=0)
        return self._covers[key]

    def _build(self, l: int, g: int) -> None:
        wide_cells = (self.sides["M"].D * self.sides["N"].D) ** (l + 2)
        if wide_cells > self.cell_cap:
            raise FamilyCapError(f"arity {l + 1} needs {wide_cells} point pairs, above the cap {self.cell_cap}")
        for lt in ("M", "N"):
            rt = other(lt)
            A, B = self.sides[lt], self.sides[rt]
            if g == 0:
                left = self._atom_rows(l, lt).astype(np.float32)
                right = self._atom_rows(l, rt).astype(np.float32)
                self._cells[(l, 0, lt)] = ~(left.T @ (1 - right) > 0)
                continue
            shape = (A.D, A.D ** l, B.D, B.D ** l)
            prev = self._cells[(l, g - 1, lt)].reshape(shape)
            back = self._cells[(l, g - 1, rt)].T.reshape(shape)
            # implication step
            eq = (prev & back).astype(np.float32)
            reach = np.tensordot(A.R, eq, axes=(1, 0)) > 0
            miss = ~reach & self.cover(l, g - 1, rt).reshape(B.D, -1)[None, None]
            bad = np.einsum("atku,ck->atcu", miss.astype(np.float32), B.R) > 0
            # exists step
            wide = (A.D, A.D ** l, A.D, B.D, B.D ** l, B.D)
            up = self._cells[(l + 1, g - 1, lt)].reshape(wide)
            found = (up & B.E[None, None, None, :, None, :]).any(axis=5)
            need = A.E[:, None, :] & self.cover(l + 1, g - 1, lt).reshape(A.D, -1, A.D)
            bad |= (need[:, :, :, None, None] & ~found).any(axis=2)
            # forall step
            if g >= 2:
                up2 = self._cells[(l + 1, g - 2, lt)].reshape(wide)
                lower = (up2 & A.E[:, None, :, None, None, None]).any(axis=2)
                lower = np.tensordot(A.R, lower.astype(np.float32), axes=(1, 0)) > 0
                unmet = (~lower & B.E[None, None, :, None, :]).any(axis=4)
                bad |= np.einsum("atku,ck->atcu", unmet.astype(np.float32), B.R) > 0
            self._cells[(l, g, lt)] = (prev & ~bad).reshape(A.D ** (l + 1), B.D ** (l + 1))

    def extend(self, budget: int) -> "GradedOrders":
        for T in range(self.budget + 1, budget + 1):
            for g in range(T + 1):
                self._build(T - g, g)
            self.budget = T
        return self

    def prune(self, keep_arity: int) -> None:
        """Drop cells that neither answer queries up to ``keep_arity`` nor feed later grades."""
        for key in [k for k in self._cells if k[0] > keep_arity and k[0] + k[1] < self.budget - 1]:
            del self._cells[key]

    def matrix(self, l: int, g: int, lt: str = "M") -> np.ndarray:
        if l + g > self.budget or (l, g, lt) not in self._cells:
            raise FamilyTooSmallError(f"orders not available at arity {l}, grade {g}")
        return self._cells[(l, g, lt)]

    def _index(self, tag: str, world: str, objs) -> int:
        side = self.sides[tag]
        i = side.pos[world]
        for o in objs:
            i = i * side.D + side.pos[o]
        return i

    def leq_states(self, lt: str, a: str, bs, c: str, ds, g: int) -> bool:
        m = self.matrix(len(bs), g, lt)
        return bool(m[self._index(lt, a, bs), self._index(other(lt), c, ds)])

    def leq(self, ptL: EvalPoint, ptR: EvalPoint, g: int) -> bool:
        if ptL.model is self.M and ptR.model is self.N:
            lt = "M"
        elif ptL.model is self.N and ptR.model is self.M:
            lt = "N"
        else:
            raise TheoryError("points must come from different sides of the pair")
        return self.leq_states(lt, ptL.world, ptL.objects, ptR.world, ptR.objects, g)


def graded_orders(M: FoModel, N: FoModel, budget: int, atom_mode: str = FULL) -> GradedOrders:
    return GradedOrders(M, N, atom_mode).extend(budget)


def asimulation_from_theory(ptM: EvalPoint, ptN: EvalPoint, k: int, atom_mode: str = FULL,
                            orders: GradedOrders | None = None) -> AsimRelation:
    """States ``(m, a', b', c', d')`` with ``m + l <= n + k`` whose left point's
    grade-``(n + k + 2 - m - l)`` theory is included in the right point's."""
    if ptM.arity != ptN.arity:
        raise TheoryError("points have different arities")
    n = ptM.arity
    top = n + k + 2
    orders = orders or GradedOrders(ptM.model, ptN.model, atom_mode)
    orders.extend(top)
    states = set()
    models = {"M": ptM.model, "N": ptN.model}
    for lt in ("M", "N"):
        alpha, beta = models[lt], models[other(lt)]
        for l in range(n + k + 1):
            for m in range(n + k - l + 1):
                grid = orders.matrix(l, top - m - l, lt)
                for i, j in zip(*np.nonzero(grid)):
                    (_, a, bs), (_, c, ds) = _unindex(alpha, l, i), _unindex(beta, l, j)
                    states.add(PairState(lt, m, a, bs, c, ds))
    seed = PairState("M", 0, ptM.world, ptM.objects, ptN.world, ptN.objects)
    if seed not in states:
        raise TheoryError("the graded theory of the left seed is not included in the right one")
    return AsimRelation(ptM, ptN, frozenset(states), k, orders.atom_mode)


def _unindex(model: FoModel, l: int, i: int) -> tuple[None, str, tuple[str, ...]]:
    D = len(model.domain)
    digits = []
    for _ in range(l + 1):
        i, r = divmod(int(i), D)
        digits.append(model.domain[r])
    digits.reverse()
    return None, digits[0], tuple(digits[1:])


def theory_order_asimulation(ptM: EvalPoint, ptN: EvalPoint, max_grade: int = 16,
                             cell_cap: int = DEFAULT_CELL_CAP) -> QuotientRelation:
    """Quotient relation of full theory inclusion between the two models.

    Graded inclusion orders shrink as the grade grows and contain every
    asimulation.  The first grade whose order satisfies the step conditions
    is therefore exactly full theory inclusion; that grade is stored as
    ``info["saturation_grade"]``.
    """
    orders = GradedOrders(ptM.model, ptN.model, FULL, cell_cap)
    game = _QuotientGame(ptM.model, ptN.model)
    all_states = list(game.all_states())
    widest = max(len(q.pairs) for q in all_states)
    for g in range(max_grade + 1):
        orders.extend(widest + g)
        orders.prune(widest)
        states = {q for q in all_states
                  if orders.leq_states(q.left_model, q.left_world, tuple(b for b, _ in q.pairs),
                                       q.right_world, tuple(d for _, d in q.pairs), g)}
        if all(_state_violation(game, q, states) is None for q in states):
            if quotient_seed(ptM, ptN) not in states:
                raise TheoryError("the theory of the left seed is not included in the right one")
            return QuotientRelation(ptM, ptN, frozenset(states), {"saturation_grade": g})
    raise TheoryError(f"graded inclusion did not stabilize by grade {max_grade}")


__all__ = [
    "DEFAULT_CAP",
    "DEFAULT_CELL_CAP",
    "DefinableFamily",
    "FamilyCapError",
    "FamilyTooSmallError",
    "GradedOrders",
    "SemanticValue",
    "TheoryError",
    "asimulation_from_theory",
    "complete_conjunction",
    "definable_family",
    "graded_orders",
    "theory_leq",
    "theory_order_asimulation",
]
