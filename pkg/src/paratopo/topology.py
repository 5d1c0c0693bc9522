"""Finite topological spaces and their point-set operators.

Point sets are plain ``int`` bitmasks: bit ``i`` set means point ``i`` is a
member.  Every finite topology is Alexandrov, so each point ``s`` has a
least open neighbourhood ``U(s)``; interior and closure are computed from
those neighbourhoods rather than by scanning the whole open family.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptyCarrier, MissingExtremes, NotClosedUnderOps, ParatopoError

MAX_POINTS = 16

PointSet = int


def pset(points: Iterable[int] = ()) -> PointSet:
    mask = 0
    for p in points:
        if p < 0:
            raise ParatopoError(f"negative point id {p}")
        mask |= 1 << p
    return mask


def members(mask: PointSet) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def full_set(n: int) -> PointSet:
    return (1 << n) - 1


def complement(n: int, mask: PointSet) -> PointSet:
    return full_set(n) & ~mask


def all_subsets(n: int) -> range:
    return range(1 << n)


def canonical_key(mask: PointSet) -> tuple[int, tuple[int, ...]]:
    """Sort key: cardinality first, then the sorted member list."""
    ms = members(mask)
    return (len(ms), ms)


def format_set(mask: PointSet) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


@dataclass(frozen=True)
class Preorder:
    """A reflexive-transitive relation on ``0..n-1`` given as a set of pairs."""

    n: int
    leq: frozenset

    def __post_init__(self):
        for a, b in self.leq:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ParatopoError(f"pair ({a},{b}) out of range for {self.n} points")
        for a in range(self.n):
            if (a, a) not in self.leq:
                raise ParatopoError(f"not reflexive at {a}")
        succ = self.up_sets()
        for a, b in self.leq:
            if succ[b] & ~succ[a]:
                raise ParatopoError(f"not transitive through ({a},{b})")

    @classmethod
    def closure_of(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Preorder":
        """Reflexive-transitive closure of an arbitrary relation."""
        succ = [1 << i for i in range(n)]
        for a, b in pairs:
            succ[a] |= 1 << b
        changed = True
        while changed:
            changed = False
            for a in range(n):
                acc = succ[a]
                for b in members(succ[a]):
                    acc |= succ[b]
                if acc != succ[a]:
                    succ[a] = acc
                    changed = True
        return cls(n, frozenset((a, b) for a in range(n) for b in members(succ[a])))

    def up_sets(self) -> list[PointSet]:
        """``up[a]`` is the mask of all ``b`` with ``a <= b``."""
        up = [0] * self.n
        for a, b in self.leq:
            up[a] |= 1 << b
        return up

    def le(self, a: int, b: int) -> bool:
        return (a, b) in self.leq


@dataclass(frozen=True)
class FiniteTopology:
    """A validated finite topology.

    ``opens`` is deduplicated and kept in canonical order.  Build instances
    through :func:`from_opens`, :func:`from_preorder` or
    :func:`generate_from_subbase`; the constructor itself trusts its input.
    """

    n: int
    opens: tuple[PointSet, ...]
    _nbhd: tuple[PointSet, ...] = field(init=False, repr=False, compare=False)
    _open_set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_open_set", frozenset(self.opens))
        full = full_set(self.n)
        nb = []
        for s in range(self.n):
            acc = full
            bit = 1 << s
            for o in self.opens:
                if o & bit:
                    acc &= o
            nb.append(acc)
        object.__setattr__(self, "_nbhd", tuple(nb))

    @property
    def full(self) -> PointSet:
        return full_set(self.n)

    @property
    def closeds(self) -> tuple[PointSet, ...]:
        full = self.full
        return tuple(sorted((full & ~o for o in self.opens), key=canonical_key))

    def is_open(self, mask: PointSet) -> bool:
        return mask in self._open_set

    def is_closed(self, mask: PointSet) -> bool:
        return (self.full & ~mask) in self._open_set

    def neighborhoods(self) -> tuple[PointSet, ...]:
        return self._nbhd

    def __str__(self) -> str:
        return f"FiniteTopology(n={self.n}, opens=[{', '.join(map(format_set, self.opens))}])"


def _check_bounds(n: int, masks: Iterable[PointSet]) -> None:
    if n < 1:
        raise ParatopoError("a space needs at least one point")
    if n > MAX_POINTS:
        raise ParatopoError(f"at most {MAX_POINTS} points are supported, got {n}")
    full = full_set(n)
    for m in masks:
        if m & ~full:
            raise ParatopoError(f"set {format_set(m)} is outside 0..{n - 1}")


def _upset_family(n: int, nbhd: Sequence[PointSet], limit: int | None = None) -> set[PointSet]:
    """All unions of the given neighbourhoods (plus the empty set)."""
    family = {0}
    for s in range(n):
        u = nbhd[s]
        family |= {o | u for o in family}
        if limit is not None and len(family) > limit:
            break
    return family


def _as_mask(x) -> PointSet:
    return x if isinstance(x, int) else pset(x)


def from_opens(n: int, family: Iterable) -> FiniteTopology:
    """Validate ``family`` as the open sets of a topology on ``n`` points.

    Members may be bitmasks or iterables of point ids.  The family is not
    completed: a missing union or intersection is an error naming the pair.
    """
    fam = {_as_mask(x) for x in family}
    _check_bounds(n, fam)
    full = full_set(n)
    if 0 not in fam or full not in fam:
        _raise_violation(fam)
        raise MissingExtremes("the empty set and the full set must both be open")
    # every finite topology is the family of up-sets of its neighbourhood
    # preorder, so compare against that instead of scanning all pairs
    nbhd = []
    for s in range(n):
        acc = full
        for o in fam:
            if o >> s & 1:
                acc &= o
        nbhd.append(acc)
    ok = all(u in fam for u in nbhd)
    if ok:
        for o in fam:
            for s in members(o):
                if nbhd[s] & ~o:
                    ok = False
                    break
            if not ok:
                break
    if ok:
        ok = len(_upset_family(n, nbhd, limit=len(fam))) == len(fam)
    if not ok:
        _raise_violation(fam)
        raise AssertionError("unreachable: invalid family with no violating pair")
    return FiniteTopology(n, tuple(sorted(fam, key=canonical_key)))


def _raise_violation(fam: set) -> None:
    """Raise for the first pair (in canonical order) whose union or intersection is missing."""
    ordered = sorted(fam, key=canonical_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in fam:
                raise NotClosedUnderOps("∪", a, b)
            if a & b not in fam:
                raise NotClosedUnderOps("∩", a, b)


def from_preorder(p: Preorder) -> FiniteTopology:
    """Alexandrov topology whose opens are the up-closed sets of ``p``."""
    _check_bounds(p.n, ())
    fam = _upset_family(p.n, p.up_sets())
    return FiniteTopology(p.n, tuple(sorted(fam, key=canonical_key)))


def generate_from_subbase(n: int, family: Iterable) -> FiniteTopology:
    """Smallest topology containing ``family`` (closes under unions and intersections)."""
    fam = [_as_mask(x) for x in family]
    _check_bounds(n, fam)
    full = full_set(n)
    nbhd = []
    for s in range(n):
        acc = full
        for o in fam:
            if o >> s & 1:
                acc &= o
        nbhd.append(acc)
    opens = _upset_family(n, nbhd)
    opens.add(full)
    return FiniteTopology(n, tuple(sorted(opens, key=canonical_key)))


def discrete(n: int) -> FiniteTopology:
    return from_preorder(Preorder(n, frozenset((i, i) for i in range(n))))


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(sorted({0, full_set(n)}, key=canonical_key)))


def specialization_preorder(t: FiniteTopology) -> Preorder:
    """``x <= y`` iff ``x`` is in the closure of ``{y}``, i.e. ``y`` is in ``U(x)``."""
    nb = t.neighborhoods()
    return Preorder(t.n, frozenset((x, y) for x in range(t.n) for y in members(nb[x])))


def specializes(t: FiniteTopology, x: int, y: int) -> bool:
    return bool(t.neighborhoods()[x] >> y & 1)


def minimal_neighborhood(t: FiniteTopology, s: int) -> PointSet:
    if not 0 <= s < t.n:
        raise ParatopoError(f"point {s} out of range")
    return t.neighborhoods()[s]


def interior(t: FiniteTopology, x: PointSet) -> PointSet:
    out = 0
    for s, u in enumerate(t.neighborhoods()):
        if u & ~x == 0:
            out |= 1 << s
    return out


def closure(t: FiniteTopology, x: PointSet) -> PointSet:
    out = 0
    for s, u in enumerate(t.neighborhoods()):
        if u & x:
            out |= 1 << s
    return out


def boundary(t: FiniteTopology, x: PointSet) -> PointSet:
    return closure(t, x) & ~interior(t, x)


def connected_components(t: FiniteTopology) -> list[PointSet]:
    """Components in ascending order of their least point."""
    nb = t.neighborhoods()
    adj = list(nb)
    for s in range(t.n):
        for y in members(nb[s]):
            adj[y] |= 1 << s
    seen = 0
    comps = []
    for s in range(t.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for y in members(frontier):
                nxt |= adj[y]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(t: FiniteTopology) -> bool:
    return len(connected_components(t)) == 1


@dataclass(frozen=True)
class Subspace:
    topology: FiniteTopology
    points: tuple[int, ...]  # points[i] is the original id of relabelled point i

    def to_original(self, mask: PointSet) -> PointSet:
        return pset(self.points[i] for i in members(mask))

    def from_original(self, mask: PointSet) -> PointSet:
        return pset(i for i, p in enumerate(self.points) if mask >> p & 1)


def subspace(t: FiniteTopology, x: PointSet) -> Subspace:
    if x == 0:
        raise EmptyCarrier("cannot restrict to the empty set")
    pts = members(x)

    def relabel(mask: PointSet) -> PointSet:
        return pset(i for i, p in enumerate(pts) if mask >> p & 1)

    induced = {relabel(o & x) for o in t.opens}
    top = FiniteTopology(len(pts), tuple(sorted(induced, key=canonical_key)))
    return Subspace(top, pts)


def dual(t: FiniteTopology) -> FiniteTopology:
    """Topology whose open sets are the closed sets of ``t``."""
    return FiniteTopology(t.n, t.closeds)


def minimum_point(t: FiniteTopology) -> int | None:
    """A point lying in every non-empty open set, if one exists.

    This is the point ``0`` of the chain C3.  It sits above every other point
    in the specialization preorder.
    """
    common = t.full
    for o in t.opens:
        if o:
            common &= o
    ms = members(common)
    return ms[0] if ms else None


def maximum_point(t: FiniteTopology) -> int | None:
    """A point lying in every non-empty closed set, if one exists."""
    return minimum_point(dual(t))


def iter_points(mask: PointSet) -> Iterator[int]:
    return iter(members(mask))


def c3() -> FiniteTopology:
    """The three-point chain with opens {}, {0}, {0,1}, {0,1,2}."""
    return from_opens(3, [(), (0,), (0, 1), (0, 1, 2)])
