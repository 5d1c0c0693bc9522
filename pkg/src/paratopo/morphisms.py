"""Maps between finite spaces: continuity, openness, homeomorphisms, homotopy fences."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import topology as tp
from .errors import MapSpaceOverflow, NotHomeomorphism, ParatopoError, PreconditionFailed, SizeMismatch
from .formula import (
    And, Bot, Box, CompNeg, Diamond, Formula, Or, ParaNeg, Prop, Top, is_well_moded, subformulas,
)
from .semantics import TopoModel, _ext, new_model
from .topology import FiniteTopology, PointSet

MAP_SPACE_CAP = 20000


@dataclass(frozen=True)
class PointMap:
    dom: int
    cod: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.dom:
            raise ParatopoError(f"map has {len(self.image)} entries for a domain of {self.dom} points")
        for v in self.image:
            if not 0 <= v < self.cod:
                raise ParatopoError(f"image point {v} outside codomain of size {self.cod}")

    @classmethod
    def of(cls, image: Iterable[int], cod: int | None = None) -> "PointMap":
        image = tuple(image)
        if cod is None:
            cod = max(image) + 1 if image else 0
        return cls(len(image), cod, image)

    @classmethod
    def identity(cls, n: int) -> "PointMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, n: int, cod: int, point: int) -> "PointMap":
        return cls(n, cod, (point,) * n)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def apply(self, mask: PointSet) -> PointSet:
        out = 0
        for x in tp.members(mask):
            out |= 1 << self.image[x]
        return out

    def preimage(self, mask: PointSet) -> PointSet:
        out = 0
        for x, y in enumerate(self.image):
            if mask >> y & 1:
                out |= 1 << x
        return out

    def is_bijective(self) -> bool:
        return self.dom == self.cod and len(set(self.image)) == self.dom

    def inverse(self) -> "PointMap":
        if not self.is_bijective():
            raise ParatopoError("map is not bijective")
        inv = [0] * self.dom
        for x, y in enumerate(self.image):
            inv[y] = x
        return PointMap(self.cod, self.dom, tuple(inv))

    def compose(self, other: "PointMap") -> "PointMap":
        """``self`` after ``other``."""
        return PointMap(other.dom, self.cod, tuple(self.image[y] for y in other.image))


def _sizes(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> None:
    if f.dom != t.n or f.cod != t2.n:
        raise SizeMismatch(f"map {f.dom}->{f.cod} does not fit spaces {t.n}->{t2.n}")


def is_continuous(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> bool:
    _sizes(f, t, t2)
    return all(t.is_open(f.preimage(o)) for o in t2.opens)


def is_order_preserving(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> bool:
    """Monotone for the specialization preorders; equivalent to continuity on finite spaces."""
    _sizes(f, t, t2)
    nb, nb2 = t.neighborhoods(), t2.neighborhoods()
    return all(f.apply(nb[x]) & ~nb2[f(x)] == 0 for x in range(t.n))


def is_open_map(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> bool:
    _sizes(f, t, t2)
    return all(t2.is_open(f.apply(o)) for o in t.opens)


def is_closed_map(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> bool:
    _sizes(f, t, t2)
    return all(t2.is_closed(f.apply(c)) for c in t.closeds)


def is_homeomorphism(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> bool:
    if f.dom != t.n or f.cod != t2.n or not f.is_bijective():
        return False
    return is_continuous(f, t, t2) and is_continuous(f.inverse(), t2, t)


def enumerate_homeomorphisms(t: FiniteTopology, t2: FiniteTopology, cap: int = 1000) -> list[PointMap]:
    """Homeomorphisms ``t -> t2`` in lexicographic order of their image tuples."""
    if t.n != t2.n or len(t.opens) != len(t2.opens):
        return []
    n = t.n
    nb, nb2 = t.neighborhoods(), t2.neighborhoods()
    sz = [bin(u).count("1") for u in nb]
    sz2 = [bin(u).count("1") for u in nb2]
    out: list[PointMap] = []
    image = [0] * n
    used = [False] * n

    def rec(x: int) -> bool:
        if x == n:
            f = PointMap(n, n, tuple(image))
            if is_homeomorphism(f, t, t2):
                out.append(f)
            return len(out) >= cap
        for y in range(n):
            if used[y] or sz[x] != sz2[y]:
                continue
            ok = True
            for z in range(x):
                fz = image[z]
                if bool(nb[x] >> z & 1) != bool(nb2[y] >> fz & 1) or bool(nb[z] >> x & 1) != bool(nb2[fz] >> y & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[x] = y
            used[y] = True
            if rec(x + 1):
                return True
            used[y] = False
        return False

    rec(0)
    return out


def enumerate_continuous_maps(t: FiniteTopology, t2: FiniteTopology, cap: int = MAP_SPACE_CAP) -> list[PointMap]:
    """All continuous maps ``t -> t2`` in lexicographic order; :class:`MapSpaceOverflow` past ``cap``."""
    n = t.n
    nb, nb2 = t.neighborhoods(), t2.neighborhoods()
    out: list[PointMap] = []
    image = [0] * n

    def rec(x: int) -> None:
        if x == n:
            if len(out) >= cap:
                raise MapSpaceOverflow(f"more than {cap} continuous maps")
            out.append(PointMap(n, t2.n, tuple(image)))
            return
        for y in range(t2.n):
            ok = True
            for z in range(x):
                fz = image[z]
                if nb[x] >> z & 1 and not nb2[y] >> fz & 1:
                    ok = False
                    break
                if nb[z] >> x & 1 and not nb2[fz] >> y & 1:
                    ok = False
                    break
            if ok:
                image[x] = y
                rec(x + 1)

    rec(0)
    return out


# --- models along maps ----------------------------------------------------------

def pushforward_model(m: TopoModel, f: PointMap, t2: FiniteTopology) -> TopoModel:
    """Model on ``t2`` with ``V'(p) = f(V(p))``; validated against the mode."""
    _sizes(f, m.space, t2)
    return new_model(t2, m.mode, {p: f.apply(v) for p, v in m.valuation.items()})


FORWARD_FRAGMENT = frozenset({Prop, Top, Bot, And, Or, Diamond, ParaNeg})
BACKWARD_FRAGMENT = frozenset({Prop, Top, Bot, And, Or, Box, CompNeg})


def in_fragment(f: Formula, fragment) -> bool:
    return all(type(g) in fragment for g in subformulas(f))


@dataclass
class FormulaVerdict:
    formula: Formula
    direction: str  # "both" | "forward" | "backward"
    status: str  # "hold" | "fail" | "skipped" | "report-only"
    counterexample: int | None = None  # a domain point
    global_ok: bool | None = None
    note: str = ""


@dataclass
class PreservationReport:
    map_kind: str
    verdicts: list[FormulaVerdict] = field(default_factory=list)
    notices: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[FormulaVerdict]:
        return [v for v in self.verdicts if v.status == "fail"]

    @property
    def report_only_failures(self) -> list[FormulaVerdict]:
        return [v for v in self.verdicts if v.status == "report-only" and v.counterexample is not None]

    @property
    def ok(self) -> bool:
        return not self.failures


def _pointwise(m, m2, f: PointMap, phi: Formula, direction: str):
    a = _ext(m, phi)
    b = _ext(m2, phi)
    for w in range(m.n):
        left = bool(a >> w & 1)
        right = bool(b >> f(w) & 1)
        if direction == "forward" and left and not right:
            return w
        if direction == "backward" and right and not left:
            return w
        if direction == "both" and left != right:
            return w
    return None


def _global(m, m2, phi: Formula, direction: str) -> bool:
    g1 = _ext(m, phi) == m.space.full
    g2 = _ext(m2, phi) == m2.space.full
    if direction == "forward":
        return g2 or not g1
    if direction == "backward":
        return g1 or not g2
    return g1 == g2


def classify_map(f: PointMap, t: FiniteTopology, t2: FiniteTopology) -> str:
    if is_homeomorphism(f, t, t2):
        return "homeomorphism"
    cont = is_continuous(f, t, t2)
    opn = is_open_map(f, t, t2)
    if cont and opn:
        return "continuous+open"
    if cont:
        return "continuous"
    if opn:
        return "open"
    return "none"


def check_truth_preservation(
    m: TopoModel,
    m2: TopoModel,
    f: PointMap,
    formulas: Sequence[Formula],
    full_language: bool = False,
) -> PreservationReport:
    """Pointwise truth transfer along ``f``.

    Homeomorphisms are checked as a biconditional on every formula.  A
    continuous map is checked forward (``w |= phi`` implies ``f(w) |= phi``)
    on the {&, |, <>, ~} fragment; an open map backward on the
    {&, |, [], -} fragment.  Formulas outside the fragment are skipped with a
    notice, or evaluated as ``report-only`` when ``full_language`` is set.
    """
    _sizes(f, m.space, m2.space)
    if m2.mode != m.mode:
        raise PreconditionFailed("models have different modes")
    for p in set(m.valuation) | set(m2.valuation):
        if f.apply(m.value(p)) != m2.value(p):
            raise PreconditionFailed(f"target valuation of {p!r} is not the image of the source valuation")
    kind = classify_map(f, m.space, m2.space)
    rep = PreservationReport(kind)
    checks: list[tuple[str, frozenset | None]] = []
    if kind == "homeomorphism":
        checks.append(("both", None))
    else:
        if kind in ("continuous", "continuous+open"):
            checks.append(("forward", FORWARD_FRAGMENT))
        if kind in ("open", "continuous+open"):
            checks.append(("backward", BACKWARD_FRAGMENT))
    if not checks:
        rep.notices.append("map is neither continuous nor open; nothing is claimed")
        if full_language:
            checks = [("forward", frozenset()), ("backward", frozenset())]
    for phi in formulas:
        if not is_well_moded(phi, m.mode):
            rep.notices.append(f"{phi}: not well-moded for {m.mode}, skipped")
            continue
        for direction, frag in checks:
            inside = frag is None or in_fragment(phi, frag)
            if not inside and not full_language:
                rep.verdicts.append(FormulaVerdict(phi, direction, "skipped", note="outside fragment"))
                rep.notices.append(f"{phi}: outside the {direction} fragment, skipped")
                continue
            w = _pointwise(m, m2, f, phi, direction)
            status = ("hold" if w is None else "fail") if inside else "report-only"
            rep.verdicts.append(FormulaVerdict(phi, direction, status, w, _global(m, m2, phi, direction)))
    return rep


# --- homotopy ---------------------------------------------------------------------

def pointwise_leq(a: PointMap, b: PointMap, t2: FiniteTopology) -> bool:
    """``a(x) <= b(x)`` in the specialization preorder of ``t2`` for every ``x``."""
    nb2 = t2.neighborhoods()
    return all(nb2[a(x)] >> b(x) & 1 for x in range(a.dom))


def comparable(a: PointMap, b: PointMap, t2: FiniteTopology) -> bool:
    return pointwise_leq(a, b, t2) or pointwise_leq(b, a, t2)


@dataclass(frozen=True)
class HomotopyFence:
    maps: tuple[PointMap, ...]

    def __len__(self) -> int:
        return len(self.maps)

    def reversed(self) -> "HomotopyFence":
        return HomotopyFence(tuple(reversed(self.maps)))

    def then(self, other: "HomotopyFence") -> "HomotopyFence":
        if self.maps[-1] != other.maps[0]:
            raise ParatopoError("fences do not meet")
        return HomotopyFence(self.maps + other.maps[1:])


def make_fence(maps: Sequence[PointMap], t: FiniteTopology, t2: FiniteTopology) -> HomotopyFence:
    if not maps:
        raise ParatopoError("a fence needs at least one map")
    for i, f in enumerate(maps):
        if not is_continuous(f, t, t2):
            raise ParatopoError(f"fence map {i} is not continuous")
    for i in range(len(maps) - 1):
        if not comparable(maps[i], maps[i + 1], t2):
            raise ParatopoError(f"fence maps {i} and {i + 1} are not pointwise comparable")
    return HomotopyFence(tuple(maps))


def are_homotopic(
    f: PointMap,
    g: PointMap,
    t: FiniteTopology,
    t2: FiniteTopology,
    universe: Sequence[PointMap] | None = None,
    cap: int = MAP_SPACE_CAP,
) -> HomotopyFence | None:
    """Shortest fence from ``f`` to ``g`` by breadth-first search, or None.

    ``universe`` restricts the intermediate maps (default: every continuous
    map ``t -> t2``).
    """
    if not (is_continuous(f, t, t2) and is_continuous(g, t, t2)):
        raise PreconditionFailed("both maps must be continuous")
    if f == g:
        return HomotopyFence((f,))
    maps = list(universe) if universe is not None else enumerate_continuous_maps(t, t2, cap)
    if f not in maps or g not in maps:
        maps = [h for h in maps if h not in (f, g)] + [f, g]
    prev: dict[PointMap, PointMap | None] = {f: None}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for k in maps:
            if k in prev or not comparable(h, k, t2):
                continue
            prev[k] = h
            if k == g:
                chain = [g]
                while prev[chain[-1]] is not None:
                    chain.append(prev[chain[-1]])
                return HomotopyFence(tuple(reversed(chain)))
            queue.append(k)
    return None


def homotopic_models(m: TopoModel, fence: HomotopyFence | Sequence[PointMap]) -> list[TopoModel]:
    """Models ``M_t`` on the space of ``m`` with ``V_t = f_t(V)``; every ``f_t`` must be a homeomorphism."""
    maps = fence.maps if isinstance(fence, HomotopyFence) else tuple(fence)
    out = []
    for i, h in enumerate(maps):
        if not is_homeomorphism(h, m.space, m.space):
            raise NotHomeomorphism(i)
        out.append(pushforward_model(m, h, m.space))
    return out


def homotopic_models_relaxed(m: TopoModel, fence: HomotopyFence | Sequence[PointMap]):
    """Continuous-fence variant: ``(models, notices)``; maps whose image valuation is invalid are skipped."""
    maps = fence.maps if isinstance(fence, HomotopyFence) else tuple(fence)
    out, notices = [], []
    for i, h in enumerate(maps):
        if not is_continuous(h, m.space, m.space):
            notices.append(f"map {i} is not continuous")
            continue
        try:
            out.append(pushforward_model(m, h, m.space))
        except ParatopoError as exc:
            notices.append(f"map {i}: {exc}")
    return out, notices
