"""Topo-bisimulations, modal equivalence and the finite Hennessy-Milner comparison."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import topology as tp
from .errors import ModeMismatch
from .formula import Formula
from .morphisms import PointMap, is_homeomorphism
from .semantics import ALGEBRA_CAP, TopoModel, _ext, definable_closure

PointRelation = frozenset  # of (point in M, point in M') pairs


def _same_mode(m: TopoModel, m2: TopoModel) -> None:
    if m.mode != m2.mode:
        raise ModeMismatch(m.mode, message=f"cannot compare a {m.mode} model with a {m2.mode} model")


def _atoms(m: TopoModel, names: Sequence[str], s: int) -> tuple[bool, ...]:
    return tuple(bool(m.value(p) >> s & 1) for p in names)


def _neighborhoods(t: tp.FiniteTopology, closed: bool) -> Sequence[tp.PointSet]:
    if not closed:
        return t.neighborhoods()
    return tuple(tp.closure(t, 1 << s) for s in range(t.n))


def greatest_topo_bisimulation(
    m: TopoModel,
    m2: TopoModel,
    closed_variant: bool = False,
    rng: random.Random | None = None,
) -> PointRelation:
    """Largest topo-bisimulation between ``m`` and ``m2``.

    Starts from all atom-agreeing pairs and deletes pairs failing forth or
    back until nothing changes.  Only least open neighbourhoods are
    inspected: every open set containing ``s`` contains ``U(s)``, and the
    clauses are monotone in the open set chosen.  ``closed_variant`` uses
    least closed neighbourhoods instead.  ``rng`` shuffles the deletion order.
    """
    _same_mode(m, m2)
    names = sorted(set(m.valuation) | set(m2.valuation))
    nb = _neighborhoods(m.space, closed_variant)
    nb2 = _neighborhoods(m2.space, closed_variant)
    rel = {
        (s, s2)
        for s in range(m.n)
        for s2 in range(m2.n)
        if _atoms(m, names, s) == _atoms(m2, names, s2)
    }
    succ = [0] * m.n  # succ[s]: mask of related points of m2
    for s, s2 in rel:
        succ[s] |= 1 << s2

    def ok(s: int, s2: int) -> bool:
        # forth: every t2 in U(s2) is related to some t in U(s)
        reach = 0
        for t in tp.members(nb[s]):
            reach |= succ[t]
        if nb2[s2] & ~reach:
            return False
        # back: every t in U(s) is related to some t2 in U(s2)
        return all(succ[t] & nb2[s2] for t in tp.members(nb[s]))

    changed = True
    while changed:
        changed = False
        order = sorted(rel)
        if rng is not None:
            rng.shuffle(order)
        for s, s2 in order:
            if not ok(s, s2):
                rel.discard((s, s2))
                succ[s] &= ~(1 << s2)
                changed = True
    return frozenset(rel)


def is_topo_bisimulation(m: TopoModel, m2: TopoModel, z: Iterable[tuple[int, int]]) -> bool:
    """Check the three clauses literally, quantifying over every open set."""
    z = set(z)
    names = sorted(set(m.valuation) | set(m2.valuation))
    for s, s2 in z:
        if not (0 <= s < m.n and 0 <= s2 < m2.n):
            return False
        if _atoms(m, names, s) != _atoms(m2, names, s2):
            return False

    def covers(o_src, o_tgt, flip: bool) -> bool:
        for y in tp.members(o_tgt):
            if not any(((y, x) if flip else (x, y)) in z for x in tp.members(o_src)):
                return False
        return True

    for s, s2 in z:
        for o in m.space.opens:
            if o >> s & 1 and not any(o2 >> s2 & 1 and covers(o, o2, False) for o2 in m2.space.opens):
                return False
        for o2 in m2.space.opens:
            if o2 >> s2 & 1 and not any(o >> s & 1 and covers(o2, o, True) for o in m.space.opens):
                return False
    return True


def is_continuous_topo_bisimulation(m: TopoModel, m2: TopoModel, z: Iterable, f: PointMap) -> bool:
    if f.dom != m.n or f.cod != m2.n:
        return False
    if not is_homeomorphism(f, m.space, m2.space):
        return False
    for p in set(m.valuation) | set(m2.valuation):
        if f.apply(m.value(p)) != m2.value(p):
            return False
    return is_topo_bisimulation(m, m2, z)


@dataclass
class Equivalence:
    relation: PointRelation
    family: dict  # (ext in M, ext in M') -> witness formula
    stable: bool  # False when a cap cut the refinement short

    def distinguishing_formula(self, s: int, s2: int) -> Formula | None:
        for (a, b), f in self.family.items():
            if bool(a >> s & 1) != bool(b >> s2 & 1):
                return f
        return None


def modal_equivalence(
    m: TopoModel,
    m2: TopoModel,
    depth_cap: int | None = None,
    count_cap: int = ALGEBRA_CAP,
) -> Equivalence:
    _same_mode(m, m2)
    fam = definable_closure(
        [m.space, m2.space], [m.valuation, m2.valuation], m.mode,
        cap=count_cap, depth_cap=depth_cap, truncate=True,
    )
    rel = frozenset(
        (s, s2)
        for s in range(m.n)
        for s2 in range(m2.n)
        if all(bool(a >> s & 1) == bool(b >> s2 & 1) for a, b in fam)
    )
    complete = len(fam) < count_cap and depth_cap is None
    return Equivalence(rel, fam, complete)


def logical_equivalence(
    m: TopoModel,
    m2: TopoModel,
    depth_cap: int | None = None,
    count_cap: int = ALGEBRA_CAP,
) -> PointRelation:
    """Pairs agreeing on every well-moded formula within the caps (no cap: full language)."""
    return modal_equivalence(m, m2, depth_cap, count_cap).relation


def formula_agreement(m: TopoModel, m2: TopoModel, formulas: Iterable[Formula]) -> PointRelation:
    """Pairs agreeing on each of the given formulas; evaluates them one by one."""
    exts = [(_ext(m, f), _ext(m2, f)) for f in formulas]
    return frozenset(
        (s, s2)
        for s in range(m.n)
        for s2 in range(m2.n)
        if all(bool(a >> s & 1) == bool(b >> s2 & 1) for a, b in exts)
    )


@dataclass
class HMReport:
    coincide: bool
    bisimulation: PointRelation
    equivalence: PointRelation
    equivalent_not_bisimilar: list = field(default_factory=list)
    bisimilar_not_equivalent: list = field(default_factory=list)
    distinguishing: dict = field(default_factory=dict)  # pair -> formula separating it


def hennessy_milner_check(
    m: TopoModel,
    m2: TopoModel,
    depth_cap: int | None = None,
    count_cap: int = ALGEBRA_CAP,
    closed_variant: bool = False,
) -> HMReport:
    bis = greatest_topo_bisimulation(m, m2, closed_variant=closed_variant)
    eq = modal_equivalence(m, m2, depth_cap, count_cap)
    rep = HMReport(bis == eq.relation, bis, eq.relation)
    rep.equivalent_not_bisimilar = sorted(eq.relation - bis)
    rep.bisimilar_not_equivalent = sorted(bis - eq.relation)
    for pair in rep.bisimilar_not_equivalent:
        f = eq.distinguishing_formula(*pair)
        if f is not None and bool(_ext(m, f) >> pair[0] & 1) != bool(_ext(m2, f) >> pair[1] & 1):
            rep.distinguishing[pair] = f
    return rep
