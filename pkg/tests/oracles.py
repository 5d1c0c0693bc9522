"""Brute-force reference implementations over Python sets.

Nothing here calls into the package's evaluation code; spaces are given as a
point count plus a list of open sets (each a frozenset).
"""
from __future__ import annotations

import itertools
from functools import reduce

from paratopo.formula import And, Bot, Box, ClassNeg, CompNeg, Diamond, Or, ParaNeg, Prop, Top


def subsets(n):
    pts = range(n)
    for r in range(n + 1):
        for c in itertools.combinations(pts, r):
            yield frozenset(c)


def close_family(n, family):
    """Smallest family containing ``family``, empty set and whole space, closed under union and intersection."""
    fam = {frozenset(), frozenset(range(n))} | {frozenset(s) for s in family}
    while True:
        new = {a | b for a in fam for b in fam} | {a & b for a in fam for b in fam}
        if new <= fam:
            return fam
        fam |= new


def is_topology(n, family):
    fam = {frozenset(s) for s in family}
    if frozenset() not in fam or frozenset(range(n)) not in fam:
        return False
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


def closeds(n, opens):
    full = frozenset(range(n))
    return [full - o for o in opens]


def interior(opens, x):
    return reduce(frozenset.union, (o for o in opens if o <= x), frozenset())


def closure(n, opens, x):
    return reduce(frozenset.intersection, (c for c in closeds(n, opens) if x <= c), frozenset(range(n)))


def boundary(n, opens, x):
    return closure(n, opens, x) - interior(opens, x)


def upsets(n, leq):
    """Every subset closed upward under the relation ``leq`` (a set of pairs)."""
    return [s for s in subsets(n) if all(b in s for a, b in leq if a in s)]


def components(n, opens):
    """Minimal non-empty clopen sets."""
    cl = set(closeds(n, opens))
    clopen = [o for o in opens if o in cl and o]
    return sorted((c for c in clopen if not any(d < c for d in clopen)), key=min)


def evaluate(n, opens, val, f):
    """Extension of ``f`` as a frozenset, straight from the operator definitions."""
    full = frozenset(range(n))
    ev = lambda g: evaluate(n, opens, val, g)
    if isinstance(f, Prop):
        return frozenset(val.get(f.name, ()))
    if isinstance(f, Top):
        return full
    if isinstance(f, Bot):
        return frozenset()
    if isinstance(f, And):
        return ev(f.left) & ev(f.right)
    if isinstance(f, Or):
        return ev(f.left) | ev(f.right)
    inner = ev(f.operand)
    if isinstance(f, ClassNeg):
        return full - inner
    if isinstance(f, ParaNeg):
        return closure(n, opens, full - inner)
    if isinstance(f, CompNeg):
        return interior(opens, full - inner)
    if isinstance(f, Box):
        return interior(opens, inner)
    if isinstance(f, Diamond):
        return closure(n, opens, inner)
    raise TypeError(f)


def kripke_holds(worlds, edges, val, w, f):
    """Pointwise Kripke truth: ``~f`` holds at ``w`` iff some successor falsifies ``f``."""
    succ = [v for (u, v) in edges if u == w]
    rec = lambda g, x=w: kripke_holds(worlds, edges, val, x, g)
    if isinstance(f, Prop):
        return w in val.get(f.name, ())
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, And):
        return rec(f.left) and rec(f.right)
    if isinstance(f, Or):
        return rec(f.left) or rec(f.right)
    if isinstance(f, Box):
        return all(rec(f.operand, v) for v in succ)
    if isinstance(f, Diamond):
        return any(rec(f.operand, v) for v in succ)
    if isinstance(f, ParaNeg):
        return any(not rec(f.operand, v) for v in succ)
    raise TypeError(f)


def continuous(image, opens, opens2):
    return all(frozenset(x for x, y in enumerate(image) if y in o) in set(opens) for o in opens2)


def homeomorphisms(n, opens, opens2):
    target = set(opens2)
    out = []
    for perm in itertools.permutations(range(n)):
        if {frozenset(perm[x] for x in o) for o in opens} == target:
            out.append(perm)
    return out


def literal_bisimilar_pairs(n, opens, val, n2, opens2, val2, names):
    """Greatest relation satisfying the three clauses over all opens, by naive deletion."""
    rel = {(s, t) for s in range(n) for t in range(n2)
           if all((s in val.get(p, ())) == (t in val2.get(p, ())) for p in names)}
    changed = True
    while changed:
        changed = False
        for s, t in sorted(rel):
            forth = all(any(t in o2 and all(any((x, y) in rel for x in o) for y in o2) for o2 in opens2)
                        for o in opens if s in o)
            back = all(any(s in o and all(any((x, y) in rel for y in o2) for x in o) for o in opens)
                       for o2 in opens2 if t in o2)
            if not (forth and back):
                rel.discard((s, t))
                changed = True
    return rel
