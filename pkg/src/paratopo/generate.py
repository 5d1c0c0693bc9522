"""Seeded random spaces, models and maps for the property suite."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import topology as tp
from .formula import Mode
from .morphisms import PointMap, enumerate_continuous_maps, is_open_map
from .semantics import TopoModel, new_model

PROP_NAMES = "pqrstuvw"


@dataclass(frozen=True)
class GenConfig:
    seed: int = 7
    min_points: int = 1
    max_points: int = 4
    props: int = 2
    depth: int = 3
    formula_cap: int = 300
    runs: int = 50

    def __post_init__(self):
        if self.min_points < 1 or self.max_points < self.min_points:
            raise ValueError("need 1 <= min_points <= max_points")
        if self.max_points > tp.MAX_POINTS:
            raise ValueError(f"max_points is limited to {tp.MAX_POINTS}")
        if self.props < 1 or self.depth < 1 or self.formula_cap < 1 or self.runs < 1:
            raise ValueError("all caps must be at least 1")
        if self.props > len(PROP_NAMES):
            raise ValueError(f"at most {len(PROP_NAMES)} propositions")

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def prop_names(self) -> list[str]:
        return list(PROP_NAMES[: self.props])


def sample_relation(rng: random.Random, n: int, density: float) -> list[tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(n) if a != b and rng.random() < density]


def sample_topology(rng: random.Random, n: int, density: float | None = None) -> tp.FiniteTopology:
    """Up-set topology of the reflexive-transitive closure of a random relation."""
    if density is None:
        density = rng.random() * 0.6
    pairs = sample_relation(rng, n, density)
    return tp.from_preorder(tp.Preorder.closure_of(n, pairs))


def random_topology(cfg: GenConfig, rng: random.Random | None = None, n: int | None = None) -> tp.FiniteTopology:
    rng = rng if rng is not None else cfg.rng("topology")
    if n is None:
        n = rng.randint(cfg.min_points, cfg.max_points)
    return sample_topology(rng, n)


def coerce(space: tp.FiniteTopology, mode: Mode, mask: tp.PointSet) -> tp.PointSet:
    mode = Mode(mode)
    if mode is Mode.PARACONSISTENT:
        return tp.closure(space, mask)
    if mode is Mode.PARACOMPLETE:
        return tp.interior(space, mask)
    return mask


def sample_subset(rng: random.Random, n: int) -> tp.PointSet:
    """Uniform size first, then uniform points: keeps closures and interiors away from the extremes."""
    return tp.pset(rng.sample(range(n), rng.randint(0, n)))


def sample_valuation(rng: random.Random, space: tp.FiniteTopology, mode: Mode, names) -> dict[str, int]:
    return {p: coerce(space, mode, sample_subset(rng, space.n)) for p in names}


def random_model(
    cfg: GenConfig,
    mode,
    rng: random.Random | None = None,
    space: tp.FiniteTopology | None = None,
) -> TopoModel:
    """Random valuation pushed into the mode: closures for paraconsistent, interiors for paracomplete."""
    rng = rng if rng is not None else cfg.rng(f"model:{Mode(mode).value}")
    if space is None:
        space = random_topology(cfg, rng)
    k = rng.randint(1, cfg.props)
    return new_model(space, mode, sample_valuation(rng, space, mode, cfg.prop_names()[:k]))


def random_permutation(rng: random.Random, n: int) -> PointMap:
    img = list(range(n))
    rng.shuffle(img)
    return PointMap(n, n, tuple(img))


def relabel(space: tp.FiniteTopology, f: PointMap) -> tp.FiniteTopology:
    """Copy of ``space`` transported along the bijection ``f``."""
    return tp.from_opens(space.n, [f.apply(o) for o in space.opens])


def random_continuous_map(rng, t: tp.FiniteTopology, t2: tp.FiniteTopology) -> PointMap:
    return rng.choice(enumerate_continuous_maps(t, t2))


def all_maps(n: int, cod: int):
    for img in itertools.product(range(cod), repeat=n):
        yield PointMap(n, cod, img)


def random_open_map(rng, t: tp.FiniteTopology, t2: tp.FiniteTopology) -> PointMap | None:
    cands = [f for f in all_maps(t.n, t2.n) if is_open_map(f, t, t2)]
    return rng.choice(cands) if cands else None
