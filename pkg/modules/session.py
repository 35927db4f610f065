"""Loading and validation of session input files.

Schema::

    {"lattice_rank": n,
     "polytopes": [{"name": str, "vertices": [[int, ...], ...]}, ...],
     "todd_table": [{"rays": [[int, ...], ...], "value": "p/q"}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .errors import InputValidationError, RankMismatch, UnknownPolytopeName
from .polytope import LatticePolytope, hull


@dataclass
class SessionConfig:
    lattice_rank: int
    polytopes: Dict[str, LatticePolytope]
    measure_table: List[Dict[str, Any]] = field(default_factory=list)
    output_format: str = "text"
    svg_path: Optional[str] = None

    def resolve(self, names: Sequence[str]) -> List[LatticePolytope]:
        out = []
        for name in names:
            if name not in self.polytopes:
                raise UnknownPolytopeName(f"unknown polytope '{name}'")
            out.append(self.polytopes[name])
        return out

    def names(self) -> Tuple[str, ...]:
        return tuple(self.polytopes)


def _int_rank(value) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputValidationError(f"lattice_rank must be a positive integer, got {value!r}")
    return value


def session_from_dict(data: Dict[str, Any], verify_hulls: bool = False) -> SessionConfig:
    if not isinstance(data, dict):
        raise InputValidationError("session input must be a JSON object")
    if "lattice_rank" not in data:
        raise InputValidationError("missing 'lattice_rank'")
    n = _int_rank(data["lattice_rank"])
    polytopes: Dict[str, LatticePolytope] = {}
    for entry in data.get("polytopes", []):
        name = entry.get("name")
        if not isinstance(name, str) or not name:
            raise InputValidationError(f"polytope entry without a name: {entry!r}")
        if name in polytopes:
            raise InputValidationError(f"duplicate polytope name '{name}'")
        vertices = entry.get("vertices") or []
        if not vertices:
            raise InputValidationError(f"polytope '{name}' has no vertices")
        for v in vertices:
            if not isinstance(v, list) or len(v) != n:
                raise RankMismatch(f"polytope '{name}': vertex {v!r} does not have {n} coordinates")
        polytopes[name] = hull([tuple(v) for v in vertices], n, verify=verify_hulls)
    table = data.get("todd_table") or []
    if not isinstance(table, list):
        raise InputValidationError("'todd_table' must be a list")
    return SessionConfig(lattice_rank=n, polytopes=polytopes, measure_table=table)


def load_session(path: str, verify_hulls: bool = False) -> SessionConfig:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise InputValidationError(f"{path} is not valid JSON: {e}") from e
    return session_from_dict(data, verify_hulls=verify_hulls)
