"""Finite paraconsistent and paracomplete topological models.

Point sets are ``int`` bitmasks (bit ``i`` is point ``i``); see :mod:`paratopo.topology`.
"""
from .errors import ParatopoError
from .formula import Mode, parse, render
from .semantics import TopoModel, extension, gap_points, glut_points, new_model, satisfies
from .topology import FiniteTopology, closure, from_opens, from_preorder, interior

__all__ = [
    "FiniteTopology", "Mode", "ParatopoError", "TopoModel", "closure", "extension", "from_opens",
    "from_preorder", "gap_points", "glut_points", "interior", "new_model", "parse", "render", "satisfies",
]
