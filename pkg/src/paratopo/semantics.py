"""Topological models, formula extensions and the definable-set algebra."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import topology as tp
from .errors import AlgebraOverflow, ParatopoError, PreconditionFailed, ValuationNotClosed, ValuationNotOpen, WrongMode
from .formula import (
    And, Bot, Box, ClassNeg, CompNeg, Diamond, Formula, Mode, MODE_NEGATION, Or, ParaNeg, Prop, Top,
    check_mode, enumerate_formulas, is_prop_name,
)
from .topology import FiniteTopology, PointSet

ALGEBRA_CAP = 4096


@dataclass(frozen=True)
class TopoModel:
    space: FiniteTopology
    mode: Mode
    valuation: Mapping[str, PointSet] = field(hash=False)

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def props(self) -> list[str]:
        return sorted(self.valuation)

    def value(self, prop: str) -> PointSet:
        # unlisted propositions are false everywhere
        return self.valuation.get(prop, 0)


def new_model(space: FiniteTopology, mode, valuation: Mapping[str, Iterable[int] | int]) -> TopoModel:
    mode = Mode(mode)
    val = {}
    for name in sorted(valuation):
        if not is_prop_name(name):
            raise ParatopoError(f"bad proposition name {name!r}")
        raw = valuation[name]
        mask = raw if isinstance(raw, int) else tp.pset(raw)
        if mask & ~space.full:
            raise ParatopoError(f"valuation of {name!r} is outside 0..{space.n - 1}")
        if mode is Mode.PARACONSISTENT and not space.is_closed(mask):
            raise ValuationNotClosed(name)
        if mode is Mode.PARACOMPLETE and not space.is_open(mask):
            raise ValuationNotOpen(name)
        val[name] = mask
    return TopoModel(space, mode, val)


# --- evaluation --------------------------------------------------------------

def _unary(space: FiniteTopology, kind: type, x: PointSet) -> PointSet:
    if kind is Box:
        return tp.interior(space, x)
    if kind is Diamond:
        return tp.closure(space, x)
    comp = space.full & ~x
    if kind is ClassNeg:
        return comp
    if kind is ParaNeg:
        return tp.closure(space, comp)
    if kind is CompNeg:
        return tp.interior(space, comp)
    raise TypeError(kind)


def _ext(m: TopoModel, f: Formula) -> PointSet:
    if isinstance(f, Prop):
        return m.value(f.name)
    if isinstance(f, Top):
        return m.space.full
    if isinstance(f, Bot):
        return 0
    if isinstance(f, And):
        return _ext(m, f.left) & _ext(m, f.right)
    if isinstance(f, Or):
        return _ext(m, f.left) | _ext(m, f.right)
    return _unary(m.space, type(f), _ext(m, f.operand))


def extension(m: TopoModel, f: Formula) -> PointSet:
    check_mode(f, m.mode)
    return _ext(m, f)


def satisfies(m: TopoModel, w: int, f: Formula) -> bool:
    if not 0 <= w < m.n:
        raise ParatopoError(f"point {w} out of range")
    return bool(extension(m, f) >> w & 1)


def globally_true(m: TopoModel, f: Formula) -> bool:
    return extension(m, f) == m.space.full


def glut_points(m: TopoModel, f: Formula) -> PointSet:
    """Points satisfying both ``f`` and ``~f``."""
    if m.mode is not Mode.PARACONSISTENT:
        raise WrongMode("glut points are defined for paraconsistent models")
    return extension(m, And(f, ParaNeg(f)))


def gap_points(m: TopoModel, f: Formula) -> PointSet:
    """Points satisfying neither ``f`` nor ``-f``."""
    if m.mode is not Mode.PARACOMPLETE:
        raise WrongMode("gap points are defined for paracomplete models")
    return m.space.full & ~extension(m, Or(f, CompNeg(f)))


# --- definable sets ------------------------------------------------------------

def definable_closure(
    spaces: Sequence[FiniteTopology],
    valuations: Sequence[Mapping[str, PointSet]],
    mode: Mode,
    cap: int = ALGEBRA_CAP,
    depth_cap: int | None = None,
    truncate: bool = False,
) -> dict[tuple[PointSet, ...], Formula]:
    """Every tuple of extensions realised by some formula, across several models at once.

    Element ``k`` of each key is the extension in ``spaces[k]``; the value is a
    witness formula.  Rounds alternate a lattice closure under ``&``/``|``
    with one application of the unary operators, so round ``d`` holds exactly
    the tuples realised by formulas of modal depth <= ``d``.  Stops at the
    fixpoint or after ``depth_cap`` rounds; beyond ``cap`` members it raises
    :class:`AlgebraOverflow`, or with ``truncate`` returns what it has.
    """
    mode = Mode(mode)
    names = sorted(set().union(*(v.keys() for v in valuations)))
    fam: dict[tuple[PointSet, ...], Formula] = {}

    def add(key, f) -> bool:
        if key in fam:
            return False
        if len(fam) >= cap:
            raise _Full if truncate else AlgebraOverflow(f"definable family exceeds {cap} sets")
        fam[key] = f
        return True

    try:
        _grow(spaces, valuations, names, mode, fam, add, depth_cap)
    except _Full:
        pass
    return fam


class _Full(Exception):
    pass


def _grow(spaces, valuations, names, mode, fam, add, depth_cap) -> None:
    add(tuple(s.full for s in spaces), Top())
    add(tuple(0 for _ in spaces), Bot())
    for p in names:
        add(tuple(v.get(p, 0) for v in valuations), Prop(p))

    unaries = (Box, Diamond, MODE_NEGATION[mode])
    depth = 0
    fresh = list(fam)
    while True:
        # lattice closure under & and |
        work = list(fresh)
        while work:
            a = work.pop()
            fa = fam[a]
            for b, fb in list(fam.items()):
                meet = tuple(x & y for x, y in zip(a, b))
                if add(meet, And(fa, fb)):
                    work.append(meet)
                join = tuple(x | y for x, y in zip(a, b))
                if add(join, Or(fa, fb)):
                    work.append(join)
        if depth_cap is not None and depth >= depth_cap:
            break
        new = []
        for key, f in list(fam.items()):
            for op in unaries:
                img = tuple(_unary(s, op, x) for s, x in zip(spaces, key))
                if add(img, op(f)):
                    new.append(img)
        if not new:
            break
        depth += 1
        fresh = new


@dataclass(frozen=True)
class DefinableAlgebra:
    n: int
    sets: tuple[PointSet, ...]
    witnesses: Mapping[PointSet, Formula] = field(hash=False, repr=False)

    def __contains__(self, mask: PointSet) -> bool:
        return mask in self.witnesses

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def formula_for(self, mask: PointSet) -> Formula:
        return self.witnesses[mask]

    def is_trivial(self) -> bool:
        return len(self.sets) <= 2


def definable_algebra(m: TopoModel, cap: int = ALGEBRA_CAP) -> DefinableAlgebra:
    fam = definable_closure([m.space], [m.valuation], m.mode, cap=cap)
    witnesses = {k[0]: f for k, f in fam.items()}
    return DefinableAlgebra(m.n, tuple(sorted(witnesses, key=tp.canonical_key)), witnesses)


# --- theories and points ---------------------------------------------------------

@dataclass(frozen=True)
class TheorySnapshot:
    point: int
    depth: int
    formulas_true: tuple[Formula, ...]


def theory_at(m: TopoModel, w: int, depth: int, cap: int) -> TheorySnapshot:
    forms = enumerate_formulas(m.props, depth, cap, m.mode) if m.props else []
    true = tuple(f for f in forms if _ext(m, f) >> w & 1)
    return TheorySnapshot(w, depth, true)


def point_witness(m: TopoModel, w: int, algebra: DefinableAlgebra | None = None):
    """``(kind, formula)`` where ``formula`` makes ``w`` a glut (or gap), else ``("classical", None)``."""
    if not 0 <= w < m.n:
        raise ParatopoError(f"point {w} out of range")
    if m.mode is Mode.CLASSICAL:
        return "classical", None
    alg = algebra if algebra is not None else definable_algebra(m)
    bit = 1 << w
    for a in alg:
        if m.mode is Mode.PARACONSISTENT:
            hit = a & ~tp.interior(m.space, a)
        else:
            hit = tp.closure(m.space, a) & ~a
        if hit & bit:
            return ("glutty" if m.mode is Mode.PARACONSISTENT else "gappy"), alg.formula_for(a)
    return "classical", None


def classify_point(m: TopoModel, w: int, algebra: DefinableAlgebra | None = None) -> str:
    return point_witness(m, w, algebra)[0]


def glutty_points(m: TopoModel, algebra: DefinableAlgebra | None = None) -> PointSet:
    alg = algebra if algebra is not None else definable_algebra(m)
    out = 0
    for a in alg:
        out |= a & ~tp.interior(m.space, a)
    return out


def _kind_ok(m: TopoModel, mask: PointSet) -> bool:
    if m.mode is Mode.PARACONSISTENT:
        return m.space.is_closed(mask)
    return m.space.is_open(mask)


def disconnecting_cover(m: TopoModel, f: Formula, algebra: DefinableAlgebra | None = None):
    """A pair of disjoint non-empty definable sets of the mode's kind covering ``[f]``, or None."""
    ext = extension(m, f)
    alg = algebra if algebra is not None else definable_algebra(m)
    cands = [a for a in alg if a and a & ~ext == 0 and _kind_ok(m, a)]
    for i, a in enumerate(cands):
        for b in cands[i:]:
            if a | b == ext and a & b == 0:
                return a, b
    return None


def is_connected_formula(m: TopoModel, f: Formula, algebra: DefinableAlgebra | None = None) -> bool:
    return disconnecting_cover(m, f, algebra) is None


# --- connected theories ------------------------------------------------------------

@dataclass
class TheoryVerdict:
    status: str  # "pass" | "vacuous" | "fail"
    witness_point: int | None = None
    witness_formula: Formula | None = None
    notes: list[str] = field(default_factory=list)


def _require_paraconsistent(m: TopoModel) -> None:
    if m.mode is not Mode.PARACONSISTENT:
        raise WrongMode("this check is stated for paraconsistent models")


def _closed_proper_witness(m: TopoModel, alg: DefinableAlgebra):
    for a in alg:
        if a and a != m.space.full and m.space.is_closed(a):
            return a
    return None


def check_connected_theory_inconsistent(m: TopoModel, basis: Sequence[Formula]) -> TheoryVerdict:
    """Look for a point ``x`` in some ``[phi_i]`` and a formula ``psi`` with ``x |= psi & ~psi``.

    ``psi`` is ``phi_i`` itself when possible; for a basis formula true
    everywhere the decomposition ``T == p | ~p`` is tried through the
    definable sets.
    """
    _require_paraconsistent(m)
    alg = definable_algebra(m)
    for f in basis:
        if not is_connected_formula(m, f, alg):
            raise PreconditionFailed(f"basis formula {f} is not connected")
    full = m.space.full
    exts = [extension(m, f) for f in basis]
    for f, e in zip(basis, exts):
        g = glut_points(m, f)
        if g:
            return TheoryVerdict("pass", tp.members(g)[0], f)
    covered = 0
    for e in exts:
        covered |= e
    if covered:
        # fall back to any glut inside the theory's extensions, atoms first
        cands = [alg.formula_for(a) for a in alg]
        cands.sort(key=lambda g: (not isinstance(g, Prop), str(g)))
        for g in cands:
            hit = glut_points(m, g) & covered
            if hit:
                return TheoryVerdict("pass", tp.members(hit)[0], g, ["witness via decomposition of a basis formula"])
    notes = []
    if not covered:
        notes.append("every basis formula has empty extension (empty theory, consistent)")
    if not tp.is_connected(m.space):
        notes.append("space is not connected")
    connected = tp.is_connected(m.space)
    expected = False
    if connected:
        for e in exts:
            if e and e != full and m.space.is_closed(e):
                expected = True
            if e == full and _closed_proper_witness(m, alg) is not None:
                expected = True
    if expected:
        return TheoryVerdict("fail", notes=notes + ["hypotheses hold but no glut was found"])
    if covered and connected:
        notes.append("no basis extension is a proper closed set and the algebra has no proper closed set")
    return TheoryVerdict("vacuous", notes=notes)


@dataclass
class SubtheoryReport:
    status: str
    checked: int = 0
    witnesses: dict = field(default_factory=dict)  # set -> (point, formula)
    consistent_closed: list = field(default_factory=list)
    consistent_unclosed: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def check_only_empty_subtheory_consistent(m: TopoModel) -> SubtheoryReport:
    """Every non-empty definable closed set must contain a glutty point.

    Definable sets that are not closed fall outside the claim; those without
    a glut are listed in ``consistent_unclosed`` for reporting.
    """
    _require_paraconsistent(m)
    if not tp.is_connected(m.space):
        return SubtheoryReport("vacuous", notes=["space is not connected"])
    alg = definable_algebra(m)
    if _closed_proper_witness(m, alg) is None:
        return SubtheoryReport("vacuous", notes=["no proper non-empty closed definable set"])
    glutty = glutty_points(m, alg)
    rep = SubtheoryReport("pass")
    for a in alg:
        if not a:
            continue
        hit = a & glutty
        if m.space.is_closed(a):
            rep.checked += 1
            if hit:
                x = tp.members(hit)[0]
                rep.witnesses[a] = (x, point_witness(m, x, alg)[1])
            else:
                rep.consistent_closed.append(a)
        elif not hit:
            rep.consistent_unclosed.append(a)
    if rep.consistent_closed:
        rep.status = "fail"
    return rep


@dataclass
class UnionVerdict:
    status: str
    union: PointSet
    clauses: dict = field(default_factory=dict)
    glut_witnesses: dict = field(default_factory=dict)  # point -> formula or None
    notes: list[str] = field(default_factory=list)


def check_union_theories(m: TopoModel, sets: Sequence[PointSet]) -> UnionVerdict:
    """Union of closed theory-extensions with a common point.

    Clauses: the union is connected (as a subspace), the union is a proper
    subset, its boundary is non-empty, and every boundary point is a glut of
    the union's defining formula.
    """
    _require_paraconsistent(m)
    if not sets:
        raise PreconditionFailed("no theories given")
    common = m.space.full
    union = 0
    for s in sets:
        if not s:
            raise PreconditionFailed(f"theory extension {tp.format_set(s)} is empty")
        if not m.space.is_closed(s):
            raise PreconditionFailed(f"theory extension {tp.format_set(s)} is not closed")
        common &= s
        union |= s
    if not common:
        raise PreconditionFailed("the theories have an empty intersection")
    v = UnionVerdict("pass", union)
    v.clauses["union_connected"] = tp.is_connected(tp.subspace(m.space, union).topology)
    proper = union != m.space.full
    v.clauses["union_proper"] = proper
    if not proper:
        v.clauses["boundary_nonempty"] = None
        v.clauses["boundary_glutty"] = None
        v.status = "vacuous"
        v.notes.append("union is the whole space; its boundary is empty")
        return v
    bd = tp.boundary(m.space, union)
    v.clauses["boundary_nonempty"] = bool(bd)
    # a point of the union's boundary satisfies phi & ~phi for any phi with [phi] = union
    glut_of_union = union & tp.closure(m.space, m.space.full & ~union)
    v.clauses["boundary_glutty"] = bool(bd) and bd & ~glut_of_union == 0
    alg = definable_algebra(m)
    for x in tp.members(bd):
        v.glut_witnesses[x] = alg.formula_for(union) if union in alg else None
    if not v.clauses["boundary_nonempty"] or not v.clauses["boundary_glutty"]:
        if tp.is_connected(m.space):
            v.status = "fail"
        else:
            v.status = "vacuous"
            v.notes.append("space is not connected")
    return v
