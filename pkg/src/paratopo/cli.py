"""Command-line entry point.

Exit codes: 0 success or true, 1 false or failed check, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import topology as tp
from .bisimulation import greatest_topo_bisimulation
from .errors import FormulaSyntaxError, ParatopoError
from .formula import parse
from .generate import GenConfig
from .kripke import kripke_to_topo, topo_to_kripke
from .morphisms import are_homotopic, enumerate_homeomorphisms
from .semantics import extension, gap_points, glut_points, satisfies
from .serialize import (
    dumps, kripke_to_dict, load_json, load_kripke, load_model, map_from_dict, model_to_dict,
)
from .suite import replay, report_json, report_table, run_property_suite, suite_failed


def _points(mask: int) -> str:
    return " ".join(map(str, tp.members(mask)))


def _formula(text: str):
    try:
        return parse(text)
    except FormulaSyntaxError as exc:
        raise ParatopoError(f"formula: {exc}") from None


def cmd_eval(a) -> int:
    m = load_model(a.model)
    ext = extension(m, _formula(a.formula))
    print(_points(ext))
    print(f"global: {str(ext == m.space.full).lower()}")
    return 0


def cmd_sat(a) -> int:
    m = load_model(a.model)
    ok = satisfies(m, a.point, _formula(a.formula))
    print(str(ok).lower())
    return 0 if ok else 1


def cmd_gluts(a) -> int:
    print(_points(glut_points(load_model(a.model), _formula(a.formula))))
    return 0


def cmd_gaps(a) -> int:
    print(_points(gap_points(load_model(a.model), _formula(a.formula))))
    return 0


def cmd_connected(a) -> int:
    ok = tp.is_connected(load_model(a.model).space)
    print(f"connected: {str(ok).lower()}")
    return 0 if ok else 1


def cmd_components(a) -> int:
    for c in tp.connected_components(load_model(a.model).space):
        print(_points(c))
    return 0


def cmd_homeo(a) -> int:
    m, m2 = load_model(a.model_a), load_model(a.model_b)
    homs = enumerate_homeomorphisms(m.space, m2.space, cap=a.cap)
    if not homs:
        print("no homeomorphism")
        return 1
    for h in homs if a.all else homs[:1]:
        print(dumps({"map": list(h.image)}))
    return 0


def cmd_bisim(a) -> int:
    z = greatest_topo_bisimulation(load_model(a.model_a), load_model(a.model_b))
    for s, s2 in sorted(z):
        print(s, s2)
    return 0


def cmd_to_kripke(a) -> int:
    print(dumps(kripke_to_dict(topo_to_kripke(load_model(a.model)))))
    return 0


def cmd_from_kripke(a) -> int:
    print(dumps(model_to_dict(kripke_to_topo(load_kripke(a.kmodel)))))
    return 0


def cmd_homotopic(a) -> int:
    m = load_model(a.model)
    f = map_from_dict(load_json(a.map_a), m.n)
    g = map_from_dict(load_json(a.map_b), m.n)
    if f.dom != m.n or g.dom != m.n:
        raise ParatopoError(f"maps must be defined on all {m.n} points")
    fence = are_homotopic(f, g, m.space, m.space)
    if fence is None:
        print("not homotopic")
        return 1
    for h in fence.maps:
        print(dumps({"map": list(h.image)}))
    return 0


def _config(a) -> GenConfig:
    try:
        return GenConfig(seed=a.seed, min_points=a.min_points, max_points=a.points, props=a.props,
                         depth=a.depth, formula_cap=a.formulas, runs=a.runs)
    except ValueError as exc:
        raise ParatopoError(str(exc)) from None


def cmd_props(a) -> int:
    cfg = _config(a)
    results = run_property_suite(cfg, a.check)
    print(report_json(results, cfg) if a.json else report_table(results, cfg))
    return 1 if suite_failed(results) else 0


def cmd_replay(a) -> int:
    data = load_json(a.record)
    records = [data]
    if isinstance(data, dict) and "checks" in data:  # a whole JSON report
        records = [r["counterexample"] for r in data["checks"] if r.get("counterexample")]
    worst = 0
    for rec in records:
        out = replay(rec)
        print(dumps({"check": rec["check"], "status": out.status, "detail": out.detail}))
        if out.status in ("fail", "report"):
            worst = 1
    return worst


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paratopo", description="Finite paraconsistent and paracomplete topological models.")
    p.add_argument("-v", "--verbose", action="store_true", help="log warnings and details")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help=None):
        sp = sub.add_parser(name, help=help)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("eval", cmd_eval, "model", "formula", help="print the extension and whether it is global")
    sp = add("sat", cmd_sat, "model", help="does the point satisfy the formula")
    sp.add_argument("point", type=int)
    sp.add_argument("formula")
    add("gluts", cmd_gluts, "model", "formula", help="points satisfying f and ~f")
    add("gaps", cmd_gaps, "model", "formula", help="points satisfying neither f nor -f")
    add("connected", cmd_connected, "model")
    add("components", cmd_components, "model")
    sp = add("homeo", cmd_homeo, "model_a", "model_b", help="homeomorphisms between the two spaces")
    sp.add_argument("--all", action="store_true")
    sp.add_argument("--cap", type=int, default=1000)
    add("bisim", cmd_bisim, "model_a", "model_b", help="greatest topo-bisimulation")
    add("to-kripke", cmd_to_kripke, "model")
    add("from-kripke", cmd_from_kripke, "kmodel")
    add("homotopic", cmd_homotopic, "model", "map_a", "map_b", help="fence between two self-maps")
    sp = add("props", cmd_props, help="run the property suite")
    sp.add_argument("--seed", type=int, default=7)
    sp.add_argument("--runs", type=int, default=50)
    sp.add_argument("--points", type=int, default=4, help="largest space size")
    sp.add_argument("--min-points", type=int, default=1)
    sp.add_argument("--props", type=int, default=2)
    sp.add_argument("--depth", type=int, default=3)
    sp.add_argument("--formulas", type=int, default=300, help="formula cap per instance")
    sp.add_argument("--check", action="append", help="run only this check (repeatable)")
    sp.add_argument("--json", action="store_true")
    add("replay", cmd_replay, "record", help="re-run a counterexample record or every failure of a JSON report")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except ParatopoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
