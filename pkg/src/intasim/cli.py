"""Command-line interface.

Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
3 nothing was run (empty budget).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .asimulation import (
    ATOM_MODES,
    SCOPES,
    EvalPoint,
    check_asimulation_quotient,
    max_asimulation_quotient,
    max_k_asimulation,
)
from .formulas import FormulaError, Vocabulary, degree, free_vars, parse_fo, parse_int, to_text
from .semantics import FoModel, KripkeModel, ModelError, classify_model, force, kripke_to_fo, satisfies_at
from .theory import TheoryError, complete_conjunction, definable_family, theory_leq
from .toolkit import SUITES, GenConfig, find_noninvariance_witness, run_property_suite
from .translation import standard_translation, translation_degree

OK, NEGATIVE, USAGE, EMPTY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _vocab(args) -> dict[str, int]:
    if not args.vocab:
        return {}
    return dict(Vocabulary.load(args.vocab).extra)


def _load_model(path: str, args) -> FoModel:
    return FoModel.load(path, _vocab(args))


def parse_point(text: str, model: FoModel) -> EvalPoint:
    """``world;obj1,obj2`` (objects may be empty)."""
    world, _, rest = text.partition(";")
    objs = tuple(o.strip() for o in rest.split(",") if o.strip())
    return EvalPoint(model, world.strip(), objs)


def parse_point_pair(text: str, M: FoModel, N: FoModel) -> tuple[EvalPoint, EvalPoint]:
    if text.count("|") != 1:
        raise UsageError(f"expected 'left|right', got {text!r}")
    left, right = text.split("|")
    return parse_point(left, M), parse_point(right, N)


def _tagged_point(text: str, M: FoModel, N: FoModel) -> EvalPoint:
    """``M:world;objs`` or ``N:world;objs``; the tag may be dropped when unambiguous."""
    if text[:2] in ("M:", "N:"):
        return parse_point(text[2:], M if text[0] == "M" else N)
    world = text.partition(";")[0].strip()
    owners = [m for m in (M, N) if world in m.domain]
    if len(owners) != 1:
        raise UsageError(f"cannot tell which model {world!r} belongs to; prefix it with M: or N:")
    return parse_point(text, owners[0])


# ---------------------------------------------------------------------------
# Subcommands


def cmd_parse(args) -> int:
    f = parse_fo(args.formula, _vocab(args)) if args.fo else parse_int(args.formula)
    data = {"text": to_text(f), "free_vars": list(free_vars(f)), "degree": degree(f)}
    if not args.fo:
        data["translation_degree"] = translation_degree(f)
    _emit(args, data, data["text"])
    return OK


def cmd_translate(args) -> int:
    st = standard_translation(parse_int(args.formula), args.var)
    _emit(args, {"text": to_text(st), "degree": degree(st)}, to_text(st))
    return OK


def cmd_eval(args) -> int:
    M = _load_model(args.model, args)
    phi = parse_fo(args.formula, M.vocab)
    pt = parse_point(args.point, M)
    value = satisfies_at(pt, phi, args.var)
    _emit(args, {"value": value}, "true" if value else "false")
    return OK if value else NEGATIVE


def cmd_force(args) -> int:
    K = KripkeModel.load(args.model)
    i = parse_int(args.formula, K.arities)
    assignment = {}
    for item in filter(None, (p.strip() for p in args.assign.split(","))):
        var, _, val = item.partition("=")
        assignment[var.strip()] = val.strip()
    value = force(K, args.world, assignment, i)
    _emit(args, {"value": value}, "true" if value else "false")
    return OK if value else NEGATIVE


def cmd_encode(args) -> int:
    enc = kripke_to_fo(KripkeModel.load(args.model), strict=args.strict)
    data = {"model": enc.model.to_json(), "issues": list(enc.issues)}
    text = json.dumps(enc.model.to_json(), indent=2, sort_keys=True)
    for issue in enc.issues:
        print(f"warning: {issue}", file=sys.stderr)
    _emit(args, data, text)
    return OK


def cmd_classify(args) -> int:
    report = classify_model(_load_model(args.model, args))
    flags = report.flags()
    data = {"flags": flags, "witnesses": {k: {"sentence": s, "assignment": a}
                                          for k, (s, a) in report.witnesses.items()}}
    lines = [f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()]
    for k, (s, a) in report.witnesses.items():
        lines.append(f"  {k} fails: {s} at {a}")
    _emit(args, data, "\n".join(lines))
    core = ("rt", "mon", "er", "type_ok")
    return OK if all(flags[k] for k in core) else NEGATIVE


def cmd_asim(args) -> int:
    M, N = _load_model(args.left, args), _load_model(args.right, args)
    p, q = parse_point_pair(args.points, M, N)
    if args.quotient:
        rel = max_asimulation_quotient(p, q, args.scope)
        doc = rel.to_json() if rel else None
        summary = f"asimulation with {len(rel)} quotient states" if rel else "no asimulation"
        if rel is not None and check_asimulation_quotient(rel) is not None:
            raise RuntimeError("internal error: computed relation fails the checker")
    else:
        if args.k is None:
            raise UsageError("--k is required unless --quotient is given")
        rel = max_k_asimulation(p, q, args.k, args.atom_mode, args.scope)
        doc = rel.to_json() if rel else None
        summary = f"{args.k}-asimulation with {len(rel)} states" if rel else f"no {args.k}-asimulation"
    if args.dump and doc is not None:
        Path(args.dump).write_text(json.dumps(doc, indent=1) + "\n")
    _emit(args, {"found": rel is not None, "relation": doc}, summary)
    return OK if rel is not None else NEGATIVE


def cmd_theory(args) -> int:
    M, N = _load_model(args.left, args), _load_model(args.right, args)
    fam = definable_family(M, N, args.arity, args.k, args.atom_mode)
    if args.leq:
        p, q = args.leq.split("|")
        pl, pr = _tagged_point(p, M, N), _tagged_point(q, M, N)
        value = theory_leq(pl, pr, args.k, fam)
        _emit(args, {"leq": value}, "true" if value else "false")
        return OK if value else NEGATIVE
    if args.complete:
        pt = _tagged_point(args.complete, M, N)
        f = complete_conjunction(pt, args.k, fam)
        _emit(args, {"formula": to_text(f)}, to_text(f))
        return OK
    dump = []
    lines = []
    for l in range(args.arity + 1):
        for g in range(args.k + 1):
            vals = fam.semantic_values(l, g)
            lines.append(f"arity {l}, grade {g}: {len(vals)} values")
            for v in vals:
                members = [f"{t}:{w};{','.join(o)}" for t, w, o in v.members()]
                lines.append(f"  {to_text(v.witness)}  {{{' '.join(members)}}}")
                dump.append({"arity": l, "grade": g, "witness": to_text(v.witness),
                             "first_grade": v.grade, "members": members})
    _emit(args, {"values": dump}, "\n".join(lines))
    return OK


def cmd_search(args) -> int:
    phi = parse_fo(args.formula, _vocab(args))
    cfg = GenConfig(max_domain=args.max_domain, seed=args.rng_seed)
    result = find_noninvariance_witness(phi, cfg, args.budget, args.var)
    if result.cases == 0:
        _emit(args, {"witness": None, "cases": 0}, "no cases run")
        return EMPTY
    w = result.witness
    if w is None:
        _emit(args, {"witness": None, "cases": result.cases}, f"none found in {result.cases} cases")
    else:
        text = (f"witness after {result.cases} cases: k={w.k}, left {w.left} true, right {w.right} false, "
                f"relation of {len(w.relation)} states")
        _emit(args, {"witness": w.to_json(), "cases": result.cases}, text)
    if args.expect and (args.expect == "none") != (w is None):
        return NEGATIVE
    return OK


def cmd_suite(args) -> int:
    kw = {"cases": args.cases, "seed": args.rng_seed}
    for name in ("max_domain", "max_worlds", "max_arity", "max_k", "depth"):
        value = getattr(args, name)
        if value is not None:
            kw[name] = value
    if args.letters:
        kw["letters"] = tuple((p, int(a)) for p, a in (item.split(":") for item in args.letters.split(",")))
    report = run_property_suite(args.name, GenConfig(**kw))
    text = f"{report.suite}: {report.cases} cases, {len(report.failures)} failures, {report.skipped} skipped"
    if report.notes:
        text += " " + json.dumps(report.notes, sort_keys=True)
    _emit(args, report.to_json(), text)
    if report.cases == 0:
        return EMPTY
    return OK if not report.failures else NEGATIVE


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="intasim", description="Asimulations and standard translations.")
    ap.add_argument("--vocab", help="JSON file mapping letters to arities")
    ap.add_argument("--atom-mode", choices=ATOM_MODES, default="full")
    ap.add_argument("--seed", dest="rng_seed", type=int, default=0, help="random seed")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse and pretty-print a formula")
    p.add_argument("formula")
    p.add_argument("--fo", action="store_true", help="first-order syntax")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("translate", help="standard translation of an intuitionistic formula")
    p.add_argument("formula")
    p.add_argument("--var", default="x")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("eval", help="truth of a first-order formula at a point")
    p.add_argument("model")
    p.add_argument("formula")
    p.add_argument("--point", required=True, help="world;obj1,obj2")
    p.add_argument("--var", default="x")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("force", help="Kripke forcing")
    p.add_argument("model")
    p.add_argument("formula")
    p.add_argument("--world", required=True)
    p.add_argument("--assign", default="", help="w1=d1,w2=d2")
    p.set_defaults(func=cmd_force)

    p = sub.add_parser("encode", help="first-order encoding of a Kripke model")
    p.add_argument("model")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("classify", help="check the Kripke-model axioms on a first-order model")
    p.add_argument("model")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("asim", help="greatest (k-)asimulation between two points")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--seed", dest="points", required=True, help="a;b1,b2|c;d1,d2")
    p.add_argument("--k", type=int)
    p.add_argument("--quotient", action="store_true", help="unbounded asimulation (full atoms)")
    p.add_argument("--scope", choices=SCOPES, default="full")
    p.add_argument("--dump", help="write the relation to this file")
    p.set_defaults(func=cmd_asim)

    p = sub.add_parser("theory", help="definable families and graded theory inclusion")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--arity", type=int, default=0)
    p.add_argument("--leq", help="M:a;b|N:c;d")
    p.add_argument("--complete", help="M:a;b")
    p.set_defaults(func=cmd_theory)

    p = sub.add_parser("search", help="look for a non-invariance witness")
    p.add_argument("formula")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--max-domain", type=int, default=3)
    p.add_argument("--var", default="x")
    p.add_argument("--expect", choices=("witness", "none"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("suite", help="run a property suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-domain", type=int)
    p.add_argument("--max-worlds", type=int)
    p.add_argument("--max-arity", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--letters", help="P:1,Q:0")
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except (UsageError, FormulaError, ModelError, TheoryError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
