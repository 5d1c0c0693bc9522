"""Named randomized checks, one per claim about paraconsistent and paracomplete models.

Every case is a plain JSON value, so a failing case can be written out and
replayed on its own with :func:`replay`.
"""
from __future__ import annotations

import functools
import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import topology as tp
from .bisimulation import (
    greatest_topo_bisimulation, hennessy_milner_check, is_continuous_topo_bisimulation,
)
from .errors import ParatopoError
from .formula import (
    And, Diamond, Formula, Mode, Or, Prop, enumerate_formulas, is_positive, parse, render,
)
from .generate import (
    GenConfig, all_maps, random_model, random_permutation, relabel, sample_topology, sample_valuation,
)
from .kripke import KripkeModel, check_translation, kripke_to_topo, topo_to_kripke, _kext
from .morphisms import (
    PointMap, are_homotopic, enumerate_continuous_maps, enumerate_homeomorphisms, in_fragment,
    is_homeomorphism, is_open_map, pushforward_model, check_truth_preservation,
)
from .semantics import (
    TopoModel, _ext, check_connected_theory_inconsistent, check_only_empty_subtheory_consistent,
    check_union_theories, definable_algebra, gap_points, glut_points, is_connected_formula, new_model,
)
from .serialize import (
    kripke_from_dict, kripke_to_dict, model_from_dict, model_to_dict, space_from_dict, space_to_dict,
)

VERDICTS = ("pass", "fail", "vacuous", "report-only")
POSITIVE_DIAMOND = frozenset({Prop, And, Or, Diamond})


@dataclass
class Outcome:
    status: str  # "pass" | "fail" | "vacuous" | "report"
    detail: dict = field(default_factory=dict)
    probe: dict | None = None  # a report-only counterexample seen alongside the verdict


@dataclass(frozen=True)
class Check:
    name: str
    generate: Callable[[random.Random, GenConfig], dict]
    evaluate: Callable[[dict], Outcome]
    regressions: tuple = ()
    report_only: bool = False
    summary: str = ""


@dataclass
class CheckResult:
    name: str
    verdict: str
    runs: int
    seed: int
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    reported: int = 0
    counterexample: dict | None = None
    probe_example: dict | None = None
    notes: list = field(default_factory=list)


# --- shared helpers ----------------------------------------------------------------

@functools.lru_cache(maxsize=256)
def _formulas(props: tuple, depth: int, cap: int, mode: str) -> tuple[Formula, ...]:
    if not props:
        return ()
    return tuple(enumerate_formulas(props, depth, cap, Mode(mode)))


def formulas_for(m: TopoModel, case: dict) -> tuple[Formula, ...]:
    return _formulas(tuple(m.props), case["depth"], case["cap"], m.mode.value)


def _sizes(rng: random.Random, cfg: GenConfig) -> int:
    return rng.randint(cfg.min_points, cfg.max_points)


def _model_case(rng, cfg, mode, cap=None, **extra) -> dict:
    m = random_model(cfg, mode, rng)
    case = {"model": model_to_dict(m), "depth": cfg.depth, "cap": cap or cfg.formula_cap}
    case.update(extra)
    return case


def _pts(mask: int) -> list[int]:
    return list(tp.members(mask))


def _c3_model(mode: str, val: dict) -> dict:
    return model_to_dict(new_model(tp.c3(), mode, val))


# --- boundaries -------------------------------------------------------------------

def _gen_space(rng, cfg):
    return {"space": space_to_dict(sample_topology(rng, _sizes(rng, cfg)))}


def _eval_complement_boundary(case):
    t = space_from_dict(case["space"])
    d = tp.dual(t)
    probe = None
    for x in tp.all_subsets(t.n):
        if tp.boundary(t, x) != tp.boundary(t, t.full & ~x):
            return Outcome("fail", {"set": _pts(x)})
        if probe is None and tp.boundary(t, x) != tp.boundary(d, x):
            probe = {"space": case["space"], "set": _pts(x), "boundary": _pts(tp.boundary(t, x)),
                     "dual_boundary": _pts(tp.boundary(d, x))}
    return Outcome("pass", probe=probe)


def _boundary_identity(case, mode):
    m = model_from_dict(case["model"])
    kind_ok = m.space.is_closed if mode is Mode.PARACONSISTENT else m.space.is_open
    pick = glut_points if mode is Mode.PARACONSISTENT else gap_points
    probe = None
    checked = 0
    for f in formulas_for(m, case):
        ext = _ext(m, f)
        got, bd = pick(m, f), tp.boundary(m.space, ext)
        if kind_ok(ext):
            checked += 1
            if got != bd:
                return Outcome("fail", {"formula": render(f), "points": _pts(got), "boundary": _pts(bd)})
        elif probe is None and got != bd:
            probe = {"model": case["model"], "formula": render(f), "points": _pts(got), "boundary": _pts(bd)}
    return Outcome("pass" if checked else "vacuous", probe=probe)


def _eval_extension_kind(case):
    m = model_from_dict(case["model"])
    kind_ok = m.space.is_closed if m.mode is Mode.PARACONSISTENT else m.space.is_open
    for f in formulas_for(m, case):
        ext = _ext(m, f)
        if not kind_ok(ext):
            return Outcome("fail", {"formula": render(f), "extension": _pts(ext)})
    return Outcome("pass")


def _gen_either_mode(rng, cfg):
    mode = rng.choice([Mode.PARACONSISTENT, Mode.PARACOMPLETE])
    return _model_case(rng, cfg, mode)


# --- discrete spaces ---------------------------------------------------------------

def _gen_discrete(rng, cfg):
    n = _sizes(rng, cfg)
    t = tp.discrete(n)
    val = sample_valuation(rng, t, Mode.PARACONSISTENT, cfg.prop_names()[: rng.randint(1, cfg.props)])
    m = new_model(t, Mode.PARACONSISTENT, val)
    return {"model": model_to_dict(m), "map": list(random_permutation(rng, n).image),
            "depth": cfg.depth, "cap": cfg.formula_cap}


def _swap_negation(f: Formula) -> str:
    return render(f).replace("~", "-")


def _eval_discrete_transfer(case):
    m = model_from_dict(case["model"])
    f = PointMap.of(case["map"], m.n)
    t2 = tp.discrete(m.n)
    if not is_homeomorphism(f, m.space, t2):
        return Outcome("fail", {"reason": "bijection between discrete spaces is not a homeomorphism"})
    m2 = new_model(t2, Mode.PARACOMPLETE, {p: f.apply(v) for p, v in m.valuation.items()})
    for phi in formulas_for(m, case):
        # positive formulas keep their truth; otherwise ~ is read as -
        psi = phi if is_positive(phi) else parse(_swap_negation(phi))
        a, b = _ext(m, phi), _ext(m2, psi)
        for w in range(m.n):
            if bool(a >> w & 1) != bool(b >> f(w) & 1):
                return Outcome("fail", {"formula": render(phi), "point": w})
    return Outcome("pass")


# --- connected formulas and theories ------------------------------------------------

def _connected_formulas(m: TopoModel, case: dict, alg):
    return [f for f in formulas_for(m, case) if is_connected_formula(m, f, alg)]


def _eval_connected_formula_subspace(case):
    m = model_from_dict(case["model"])
    alg = definable_algebra(m)
    seen = 0
    for f in _connected_formulas(m, case, alg):
        ext = _ext(m, f)
        if not ext:
            continue
        seen += 1
        if not tp.is_connected(tp.subspace(m.space, ext).topology):
            return Outcome("report", {"formula": render(f), "extension": _pts(ext)})
    return Outcome("pass" if seen else "vacuous")


def _eval_connected_theory_subspace(case):
    m = model_from_dict(case["model"])
    alg = definable_algebra(m)
    conn = [f for f in _connected_formulas(m, case, alg) if _ext(m, f)][:12]
    seen = 0
    for i, f in enumerate(conn):
        for g in conn[i:]:
            ext = _ext(m, f) & _ext(m, g)
            if not ext:
                continue
            seen += 1
            if not tp.is_connected(tp.subspace(m.space, ext).topology):
                return Outcome("report", {"basis": [render(f), render(g)], "extension": _pts(ext)})
    return Outcome("pass" if seen else "vacuous")


def _gen_paracon(rng, cfg):
    return _model_case(rng, cfg, Mode.PARACONSISTENT, cap=min(cfg.formula_cap, 60),
                      pick=rng.randrange(1 << 16))


def _eval_connected_theory_glut(case):
    m = model_from_dict(case["model"])
    alg = definable_algebra(m)
    conn = _connected_formulas(m, case, alg)
    if not conn:
        return Outcome("vacuous", {"note": "no connected formula"})
    k = case["pick"]
    basis = [conn[k % len(conn)]]
    if len(conn) > 1:
        basis.append(conn[(k // len(conn)) % len(conn)])
    v = check_connected_theory_inconsistent(m, basis)
    detail = {"basis": [render(f) for f in basis], "notes": v.notes}
    if v.witness_point is not None:
        detail.update(point=v.witness_point, glut_formula=render(v.witness_formula))
    return Outcome(v.status, detail)


def _eval_only_empty_consistent(case):
    m = model_from_dict(case["model"])
    r = check_only_empty_subtheory_consistent(m)
    detail = {"notes": r.notes, "checked": r.checked}
    if r.consistent_closed:
        detail["consistent_closed"] = [_pts(a) for a in r.consistent_closed]
    probe = None
    if r.consistent_unclosed:
        probe = {"model": case["model"], "consistent_unclosed": [_pts(a) for a in r.consistent_unclosed]}
    return Outcome(r.status, detail, probe)


def _eval_union_theories(case):
    m = model_from_dict(case["model"])
    alg = definable_algebra(m)
    x = case["pick"] % m.n
    sets = [a for a in alg if a >> x & 1 and m.space.is_closed(a) and a != m.space.full][:3]
    if not sets:
        return Outcome("vacuous", {"note": f"no proper closed definable set through point {x}"})
    v = check_union_theories(m, sets)
    return Outcome(v.status, {"sets": [_pts(a) for a in sets], "clauses": v.clauses, "notes": v.notes})


# --- maps ------------------------------------------------------------------------

def _gen_homeomorphism(rng, cfg):
    mode = rng.choice(list(Mode))
    case = _model_case(rng, cfg, mode)
    t = space_from_dict(case["model"])
    case["target"] = space_to_dict(relabel(t, random_permutation(rng, t.n)))
    return case


def _eval_homeomorphism(case):
    m = model_from_dict(case["model"])
    t2 = space_from_dict(case["target"])
    homs = enumerate_homeomorphisms(m.space, t2, cap=50)
    if not homs:
        return Outcome("fail", {"reason": "no homeomorphism onto a relabelled copy"})
    forms = formulas_for(m, case)
    for h in homs:
        m2 = pushforward_model(m, h, t2)
        for phi in forms:
            a, b = _ext(m, phi), _ext(m2, phi)
            if h.apply(a) != b:
                return Outcome("fail", {"map": list(h.image), "formula": render(phi),
                                        "image": _pts(h.apply(a)), "extension": _pts(b)})
    return Outcome("pass")


def _gen_map(rng, cfg, mode, want):
    m = random_model(cfg, mode, rng)
    t2 = sample_topology(rng, _sizes(rng, cfg))
    cands = []
    for f in enumerate_continuous_maps(m.space, t2) if want == "continuous" else _open_maps(m.space, t2):
        try:
            pushforward_model(m, f, t2)
        except ParatopoError:
            continue
        cands.append(f)
    case = {"model": model_to_dict(m), "target": space_to_dict(t2), "depth": cfg.depth,
            "cap": cfg.formula_cap, "map": None}
    if cands:
        case["map"] = list(rng.choice(cands).image)
    return case


def _open_maps(t, t2):
    return [f for f in all_maps(t.n, t2.n) if is_open_map(f, t, t2)]


def _eval_preservation(case):
    if case["map"] is None:
        return Outcome("vacuous", {"note": "no admissible map with a valid pushforward"})
    m = model_from_dict(case["model"])
    t2 = space_from_dict(case["target"])
    f = PointMap.of(case["map"], t2.n)
    m2 = pushforward_model(m, f, t2)
    rep = check_truth_preservation(m, m2, f, formulas_for(m, case), full_language=True)
    probe = None
    if rep.report_only_failures:
        v = rep.report_only_failures[0]
        probe = {"model": case["model"], "target": case["target"], "map": case["map"],
                 "formula": render(v.formula), "direction": v.direction, "point": v.counterexample}
    if rep.failures:
        v = rep.failures[0]
        sound = sum(1 for x in rep.failures if in_fragment(x.formula, POSITIVE_DIAMOND))
        return Outcome("fail", {"map_kind": rep.map_kind, "formula": render(v.formula),
                                "direction": v.direction, "point": v.counterexample,
                                "fragment_failures": len(rep.failures),
                                "positive_diamond_failures": sound}, probe)
    return Outcome("pass", {"map_kind": rep.map_kind}, probe)


# --- homotopy ---------------------------------------------------------------------

def _global_theory(m: TopoModel, forms) -> list[str]:
    return [render(f) for f in forms if _ext(m, f) == m.space.full]


def _eval_homotopy(case):
    m = model_from_dict(case["model"])
    t = m.space
    forms = formulas_for(m, case)
    status = "vacuous"
    low = tp.minimum_point(t)
    if low is not None:
        ident, const = PointMap.identity(t.n), PointMap.constant(t.n, t.n, low)
        if are_homotopic(ident, const, t, t) is None:
            return Outcome("fail", {"reason": "identity and constant-to-minimum not homotopic", "minimum": low})
        status = "pass"
    autos = enumerate_homeomorphisms(t, t, cap=50)
    k = case["pick"]
    f, g = autos[k % len(autos)], autos[(k // len(autos)) % len(autos)]
    fence = are_homotopic(f, g, t, t, universe=autos)
    if fence is not None and len(fence) > 1:
        models = [pushforward_model(m, h, t) for h in fence.maps]
        base = _global_theory(models[0], forms)
        for i, mi in enumerate(models[1:], 1):
            if _global_theory(mi, forms) != base:
                return Outcome("fail", {"fence": [list(h.image) for h in fence.maps], "index": i})
        status = "pass"
    probe = None
    # continuous fences: the family need not agree, observe only
    for h in enumerate_continuous_maps(t, t):
        if h == PointMap.identity(t.n) or not (are_homotopic(PointMap.identity(t.n), h, t, t)):
            continue
        try:
            mh = pushforward_model(m, h, t)
        except ParatopoError:
            continue
        if _global_theory(mh, forms) != _global_theory(m, forms):
            probe = {"model": case["model"], "map": list(h.image)}
            break
    return Outcome(status, probe=probe)


def _gen_homotopy(rng, cfg):
    mode = rng.choice([Mode.PARACONSISTENT, Mode.PARACOMPLETE])
    return _model_case(rng, cfg, mode, cap=min(cfg.formula_cap, 100), pick=rng.randrange(1 << 16))


# --- bisimulation -------------------------------------------------------------------

def _eval_continuous_bisim(case):
    m = model_from_dict(case["model"])
    t2 = space_from_dict(case["target"])
    f = PointMap.of(case["map"], m.n)
    m2 = pushforward_model(m, f, t2)
    z = greatest_topo_bisimulation(m, m2)
    graph = {(w, f(w)) for w in range(m.n)}
    if not graph <= z:
        return Outcome("fail", {"reason": "graph of the homeomorphism is not bisimilar"})
    if not is_continuous_topo_bisimulation(m, m2, z, f):
        return Outcome("fail", {"reason": "not a continuous topo-bisimulation"})
    for phi in formulas_for(m, case):
        a, b = _ext(m, phi), _ext(m2, phi)
        for s, s2 in sorted(z):
            if bool(a >> s & 1) != bool(b >> s2 & 1):
                return Outcome("fail", {"formula": render(phi), "pair": [s, s2]})
    return Outcome("pass")


def _gen_continuous_bisim(rng, cfg):
    case = _model_case(rng, cfg, rng.choice(list(Mode)))
    t = space_from_dict(case["model"])
    f = random_permutation(rng, t.n)
    case["target"] = space_to_dict(relabel(t, f))
    case["map"] = list(f.image)
    return case


def _gen_pair(rng, cfg):
    mode = rng.choice(list(Mode))
    a = random_model(cfg, mode, rng)
    b = random_model(cfg, mode, rng)
    return {"models": [model_to_dict(a), model_to_dict(b)]}


def _eval_hennessy_milner(case):
    m, m2 = (model_from_dict(d) for d in case["models"])
    r = hennessy_milner_check(m, m2)
    if r.coincide:
        return Outcome("pass")
    return Outcome("fail", {
        "equivalent_not_bisimilar": [list(p) for p in r.equivalent_not_bisimilar],
        "bisimilar_not_equivalent": [list(p) for p in r.bisimilar_not_equivalent],
    })


# --- Kripke translations ------------------------------------------------------------

def _eval_topo_to_kripke(case):
    m = model_from_dict(case["model"])
    rep = check_translation(m, formulas_for(m, case))
    for row in rep.rows:
        if not row.forward_ok:
            w = tp.members(row.topo & ~row.kripke)[0]
            return Outcome("fail", {"formula": render(row.formula), "world": w})
    back = kripke_to_topo(topo_to_kripke(m))
    if set(back.space.closeds) != set(m.space.closeds):
        return Outcome("fail", {"reason": "round trip changed the closed sets"})
    probe = None
    if not rep.biconditional_ok:
        f, w = rep.disagreements()[0]
        probe = {"model": case["model"], "formula": render(f), "world": w}
    return Outcome("pass", probe=probe)


def _gen_kripke(rng, cfg):
    n = _sizes(rng, cfg)
    t = sample_topology(rng, n)
    pre = tp.specialization_preorder(t)
    # w R v iff w lies in the closure of v, i.e. v is in U(w)
    edges = sorted((w, v) for w in range(n) for v in range(n) if pre.le(w, v))
    val = sample_valuation(rng, t, Mode.PARACONSISTENT, cfg.prop_names()[: rng.randint(1, cfg.props)])
    k = KripkeModel.build(n, edges, val)
    return {"kripke": kripke_to_dict(k), "depth": cfg.depth, "cap": cfg.formula_cap}


def _eval_kripke_to_topo(case):
    k = kripke_from_dict(case["kripke"])
    m = kripke_to_topo(k)
    succ = k.successors()
    probe = None
    for phi in _formulas(tuple(sorted(k.valuation)), case["depth"], case["cap"], Mode.PARACONSISTENT.value):
        a, b = _kext(k, succ, phi), _ext(m, phi)
        if a & ~b:
            return Outcome("fail", {"formula": render(phi), "world": tp.members(a & ~b)[0]})
        if probe is None and a != b:
            probe = {"kripke": case["kripke"], "formula": render(phi), "world": tp.members(a ^ b)[0]}
    return Outcome("pass", probe=probe)


# --- registry -----------------------------------------------------------------------

def _c3_case(mode="paraconsistent", val=None, depth=3, cap=300, **extra):
    case = {"model": _c3_model(mode, val or {"p": [1, 2]}), "depth": depth, "cap": cap}
    case.update(extra)
    return case


CHECKS: tuple[Check, ...] = (
    Check("complement_boundary", _gen_space, _eval_complement_boundary,
          ({"space": space_to_dict(tp.c3())},),
          summary="a set and its complement have the same boundary; dual-space boundaries observed"),
    Check("connected_formula_subspace", lambda r, c: _model_case(r, c, Mode.CLASSICAL, cap=min(c.formula_cap, 60)),
          _eval_connected_formula_subspace, (_c3_case("classical", {"p": [0, 2]}, cap=60),), report_only=True,
          summary="a satisfiable connected formula has a connected extension"),
    Check("connected_theory_glut", _gen_paracon, _eval_connected_theory_glut,
          (_c3_case(cap=60, pick=0),),
          summary="a connected theory in a connected paraconsistent model has a glut"),
    Check("connected_theory_subspace", lambda r, c: _model_case(r, c, Mode.CLASSICAL, cap=min(c.formula_cap, 60)),
          _eval_connected_theory_subspace, (_c3_case("classical", {"p": [0, 2]}, cap=60),), report_only=True,
          summary="a theory of connected formulas has a connected extension"),
    Check("continuous_bisimulation_invariance", _gen_continuous_bisim, _eval_continuous_bisim,
          summary="continuously bisimilar points agree on every formula"),
    Check("continuous_forward_preservation",
          lambda r, c: _gen_map(r, c, Mode.PARACONSISTENT, "continuous"), _eval_preservation,
          summary="continuous maps carry truth forward on the {&, |, <>, ~} fragment"),
    Check("discrete_homeomorphism_transfer", _gen_discrete, _eval_discrete_transfer,
          ({"model": model_to_dict(new_model(tp.discrete(3), "paraconsistent", {"p": [0, 2]})),
            "map": [2, 0, 1], "depth": 3, "cap": 300},),
          summary="paraconsistent and paracomplete discrete models correspond through a bijection"),
    Check("extension_kind", _gen_either_mode, _eval_extension_kind,
          (_c3_case(),),
          summary="every extension is closed (paraconsistent) or open (paracomplete)"),
    Check("finite_hennessy_milner", _gen_pair, _eval_hennessy_milner,
          summary="greatest topo-bisimulation equals logical equivalence"),
    Check("gap_boundary_identity", lambda r, c: _model_case(r, c, Mode.PARACOMPLETE),
          lambda case: _boundary_identity(case, Mode.PARACOMPLETE),
          (_c3_case("paracomplete", {"p": [0, 1]}),),
          summary="gap points are the boundary of an open extension"),
    Check("glut_boundary_identity", lambda r, c: _model_case(r, c, Mode.PARACONSISTENT),
          lambda case: _boundary_identity(case, Mode.PARACONSISTENT), (_c3_case(),),
          summary="glut points are the boundary of a closed extension"),
    Check("homeomorphism_truth_preservation", _gen_homeomorphism, _eval_homeomorphism,
          ({**_c3_case(), "target": space_to_dict(tp.c3())},),
          summary="homeomorphisms preserve truth both ways"),
    Check("homotopic_models_agree", _gen_homotopy, _eval_homotopy, (_c3_case(cap=100, pick=0),),
          summary="homeomorphism fences give models with one global theory"),
    Check("kripke_to_topo_truth", _gen_kripke, _eval_kripke_to_topo,
          summary="Kripke truth carries over to the down-set topology"),
    Check("only_empty_theory_consistent", _gen_paracon, _eval_only_empty_consistent, (_c3_case(cap=60, pick=0),),
          summary="every non-empty closed definable set contains a glut"),
    Check("open_backward_preservation",
          lambda r, c: _gen_map(r, c, Mode.PARACOMPLETE, "open"), _eval_preservation,
          summary="open maps reflect truth on the {&, |, [], -} fragment"),
    Check("topo_to_kripke_truth", lambda r, c: _model_case(r, c, Mode.PARACONSISTENT), _eval_topo_to_kripke,
          (_c3_case(),), summary="topological truth carries over to the closure relation"),
    Check("union_of_theories_glut", _gen_paracon, _eval_union_theories,
          (_c3_case(val={"p": [1, 2], "q": [2]}, cap=60, pick=2),),
          summary="a union of closed theories through a point has a glutty boundary"),
)

CHECKS_BY_NAME = {c.name: c for c in CHECKS}


def run_check(check: Check, cfg: GenConfig) -> CheckResult:
    rng = cfg.rng(check.name)
    cases = list(check.regressions) + [check.generate(rng, cfg) for _ in range(cfg.runs)]
    res = CheckResult(check.name, "vacuous", len(cases), cfg.seed)
    for case in cases:
        out = check.evaluate(case)
        if out.status == "fail":
            res.failed += 1
            if res.counterexample is None:
                res.counterexample = {"check": check.name, "case": case, "detail": out.detail}
        elif out.status == "report":
            res.reported += 1
            if res.probe_example is None:
                res.probe_example = {"check": check.name, "case": case, "detail": out.detail}
        elif out.status == "pass":
            res.passed += 1
        else:
            res.vacuous += 1
        if out.probe is not None:
            res.reported += 1
            if res.probe_example is None:
                res.probe_example = {"check": check.name, "case": case, "detail": out.probe}
    if check.report_only:
        res.verdict = "report-only"
    elif res.failed:
        res.verdict = "fail"
    elif res.passed:
        res.verdict = "pass"
    if res.reported:
        res.notes.append(f"{res.reported} report-only counterexample(s) observed")
    return res


def run_property_suite(cfg: GenConfig, only: list[str] | None = None) -> list[CheckResult]:
    names = sorted(CHECKS_BY_NAME) if not only else sorted(only)
    for n in names:
        if n not in CHECKS_BY_NAME:
            raise ParatopoError(f"unknown check {n!r}")
    return [run_check(CHECKS_BY_NAME[n], cfg) for n in names]


def replay(record: dict) -> Outcome:
    """Re-run one recorded case (a ``counterexample`` or ``probe_example`` entry)."""
    try:
        check = CHECKS_BY_NAME[record["check"]]
        case = record["case"]
    except (KeyError, TypeError):
        raise ParatopoError("a replay record needs 'check' and 'case'") from None
    return check.evaluate(case)


# --- rendering ------------------------------------------------------------------------

def report_json(results: list[CheckResult], cfg: GenConfig) -> str:
    return json.dumps({"config": asdict(cfg), "checks": [asdict(r) for r in results]}, indent=2)


def report_table(results: list[CheckResult], cfg: GenConfig) -> str:
    lines = [f"seed={cfg.seed} runs={cfg.runs} points={cfg.min_points}..{cfg.max_points} "
             f"props={cfg.props} depth={cfg.depth} formulas<={cfg.formula_cap}"]
    width = max(len(r.name) for r in results) if results else 10
    lines.append(f"{'check':<{width}}  {'verdict':<11}  pass  fail  vac  rep")
    for r in results:
        lines.append(f"{r.name:<{width}}  {r.verdict:<11}  {r.passed:>4}  {r.failed:>4}  {r.vacuous:>3}  {r.reported:>3}")
    for r in results:
        if r.counterexample is not None:
            lines.append(f"counterexample {r.name}: {json.dumps(r.counterexample)}")
    return "\n".join(lines)


def suite_failed(results: list[CheckResult]) -> bool:
    return any(r.verdict == "fail" for r in results)
