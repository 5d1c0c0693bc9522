"""Kripke models with the modal paraconsistent negation, and the translations to and from topological models."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import topology as tp
from .errors import ModeMismatch, ParatopoError, ValuationNotClosed, WrongMode
from .formula import (
    And, Bot, Box, Diamond, Formula, Mode, Or, ParaNeg, Prop, Top, check_mode,
)
from .semantics import TopoModel, _ext, new_model

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class KripkeModel:
    worlds: int
    relation: frozenset  # of (w, v) pairs, w R v
    valuation: Mapping[str, tp.PointSet] = field(hash=False)

    def __post_init__(self):
        for w, v in self.relation:
            if not (0 <= w < self.worlds and 0 <= v < self.worlds):
                raise ParatopoError(f"edge ({w},{v}) out of range for {self.worlds} worlds")
        full = tp.full_set(self.worlds)
        for p, s in self.valuation.items():
            if s & ~full:
                raise ParatopoError(f"valuation of {p!r} is outside 0..{self.worlds - 1}")

    @classmethod
    def build(cls, worlds: int, edges: Iterable[Sequence[int]], valuation: Mapping[str, Iterable[int]]):
        val = {p: (v if isinstance(v, int) else tp.pset(v)) for p, v in valuation.items()}
        return cls(worlds, frozenset((int(a), int(b)) for a, b in edges), val)

    def successors(self) -> list[tp.PointSet]:
        succ = [0] * self.worlds
        for w, v in self.relation:
            succ[w] |= 1 << v
        return succ

    def is_preorder(self) -> bool:
        succ = self.successors()
        if any(not succ[w] >> w & 1 for w in range(self.worlds)):
            return False
        return all(succ[v] & ~succ[w] == 0 for w, v in self.relation)


def _kext(k: KripkeModel, succ: list[int], f: Formula) -> tp.PointSet:
    full = tp.full_set(k.worlds)
    if isinstance(f, Prop):
        return k.valuation.get(f.name, 0)
    if isinstance(f, Top):
        return full
    if isinstance(f, Bot):
        return 0
    if isinstance(f, And):
        return _kext(k, succ, f.left) & _kext(k, succ, f.right)
    if isinstance(f, Or):
        return _kext(k, succ, f.left) | _kext(k, succ, f.right)
    inner = _kext(k, succ, f.operand)
    out = 0
    for w in range(k.worlds):
        if isinstance(f, Box):
            hit = succ[w] & ~inner == 0
        elif isinstance(f, Diamond):
            hit = bool(succ[w] & inner)
        else:  # ParaNeg: some successor falsifies the operand
            hit = bool(succ[w] & ~inner)
        if hit:
            out |= 1 << w
    return out


def kripke_extension(k: KripkeModel, f: Formula) -> tp.PointSet:
    check_mode(f, Mode.PARACONSISTENT)
    return _kext(k, k.successors(), f)


def eval_kripke(k: KripkeModel, w: int, f: Formula) -> bool:
    if not 0 <= w < k.worlds:
        raise ParatopoError(f"world {w} out of range")
    return bool(kripke_extension(k, f) >> w & 1)


def topo_to_kripke(m: TopoModel) -> KripkeModel:
    """``w R v`` iff ``w`` lies in the closure of ``{v}``; the valuation is carried over."""
    if m.mode is not Mode.PARACONSISTENT:
        raise WrongMode("the translation is defined for paraconsistent models")
    rel = frozenset(
        (w, v) for v in range(m.n) for w in tp.members(tp.closure(m.space, 1 << v))
    )
    return KripkeModel(m.n, rel, dict(m.valuation))


def kripke_to_topo(k: KripkeModel) -> TopoModel:
    """Closed sets are the sets closed downward along R (``w R v``, ``v`` in C gives ``w`` in C).

    A relation that is not a preorder is replaced by its reflexive-transitive
    closure, with a warning.
    """
    pre = tp.Preorder.closure_of(k.worlds, k.relation)
    if not k.is_preorder():
        log.warning("accessibility relation is not a preorder; using its reflexive-transitive closure")
    space = tp.from_preorder(pre)
    for p in sorted(k.valuation):
        if not space.is_closed(k.valuation[p]):
            raise ValuationNotClosed(p)
    return new_model(space, Mode.PARACONSISTENT, dict(k.valuation))


@dataclass
class TranslationRow:
    formula: Formula
    topo: tp.PointSet
    kripke: tp.PointSet

    @property
    def forward_ok(self) -> bool:
        """Every topological truth is a Kripke truth."""
        return self.topo & ~self.kripke == 0

    @property
    def agree(self) -> bool:
        return self.topo == self.kripke


@dataclass
class TranslationReport:
    rows: list[TranslationRow]

    @property
    def forward_ok(self) -> bool:
        return all(r.forward_ok for r in self.rows)

    @property
    def biconditional_ok(self) -> bool:
        return all(r.agree for r in self.rows)

    def disagreements(self) -> list[tuple[Formula, int]]:
        out = []
        for r in self.rows:
            for w in tp.members(r.topo ^ r.kripke):
                out.append((r.formula, w))
        return out


def check_translation(m: TopoModel, formulas: Iterable[Formula]) -> TranslationReport:
    if m.mode is not Mode.PARACONSISTENT:
        raise WrongMode("the translation is defined for paraconsistent models")
    k = topo_to_kripke(m)
    succ = k.successors()
    rows = []
    for f in formulas:
        check_mode(f, Mode.PARACONSISTENT)
        rows.append(TranslationRow(f, _ext(m, f), _kext(k, succ, f)))
    return TranslationReport(rows)
