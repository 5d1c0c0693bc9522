"""JSON file formats for models, Kripke models and maps.

Model:  {"points": 3, "opens": [[], [0], [0, 1], [0, 1, 2]], "mode": "paraconsistent", "valuation": {"p": [1, 2]}}
Kripke: {"worlds": 2, "edges": [[0, 0], [1, 0], [1, 1]], "valuation": {"p": [0]}}
Map:    {"map": [0, 0, 1]}
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import topology as tp
from .errors import ParatopoError
from .formula import Mode
from .kripke import KripkeModel
from .morphisms import PointMap
from .semantics import TopoModel, new_model


class FormatError(ParatopoError):
    pass


def _int_list(x, what: str) -> list[int]:
    if not isinstance(x, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise FormatError(f"{what} must be a list of integers")
    return x


def space_to_dict(t: tp.FiniteTopology) -> dict:
    return {"points": t.n, "opens": [list(tp.members(o)) for o in t.opens]}


def model_to_dict(m: TopoModel) -> dict:
    d = space_to_dict(m.space)
    d["mode"] = m.mode.value
    d["valuation"] = {p: list(tp.members(m.valuation[p])) for p in sorted(m.valuation)}
    return d


def space_from_dict(d: Any) -> tp.FiniteTopology:
    if not isinstance(d, dict) or "points" not in d or "opens" not in d:
        raise FormatError("a model needs 'points' and 'opens'")
    n = d["points"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError("'points' must be an integer")
    if not isinstance(d["opens"], list):
        raise FormatError("'opens' must be a list of point lists")
    return tp.from_opens(n, [_int_list(o, "each open set") for o in d["opens"]])


def model_from_dict(d: Any) -> TopoModel:
    space = space_from_dict(d)
    try:
        mode = Mode(d.get("mode", "classical"))
    except ValueError:
        raise FormatError(f"unknown mode {d.get('mode')!r}") from None
    val = d.get("valuation", {})
    if not isinstance(val, dict):
        raise FormatError("'valuation' must map proposition names to point lists")
    return new_model(space, mode, {p: _int_list(v, f"valuation of {p!r}") for p, v in val.items()})


def kripke_to_dict(k: KripkeModel) -> dict:
    return {
        "worlds": k.worlds,
        "edges": [list(e) for e in sorted(k.relation)],
        "valuation": {p: list(tp.members(k.valuation[p])) for p in sorted(k.valuation)},
    }


def kripke_from_dict(d: Any) -> KripkeModel:
    if not isinstance(d, dict) or "worlds" not in d:
        raise FormatError("a Kripke model needs 'worlds'")
    edges = d.get("edges", [])
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise FormatError("'edges' must be a list of [w, v] pairs")
    val = d.get("valuation", {})
    if not isinstance(val, dict):
        raise FormatError("'valuation' must map proposition names to world lists")
    return KripkeModel.build(d["worlds"], [_int_list(e, "edge") for e in edges],
                             {p: _int_list(v, f"valuation of {p!r}") for p, v in val.items()})


def map_to_dict(f: PointMap) -> dict:
    return {"map": list(f.image)}


def map_from_dict(d: Any, cod: int) -> PointMap:
    if not isinstance(d, dict) or "map" not in d:
        raise FormatError("a map file needs 'map'")
    return PointMap(len(d["map"]), cod, tuple(_int_list(d["map"], "'map'")))


def dumps(obj: Any) -> str:
    return json.dumps(obj)


def load_json(path: str | Path) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None


def load_model(path) -> TopoModel:
    return model_from_dict(load_json(path))


def load_kripke(path) -> KripkeModel:
    return kripke_from_dict(load_json(path))
