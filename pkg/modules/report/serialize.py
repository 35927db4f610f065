from __future__ import annotations

import json
from typing import Any, Dict, List

from ..tropcycle import Cone, TropicalCycle, WeightPoly, rational_to_text


def weight_to_dict(w: WeightPoly) -> Dict[str, str]:
    return {str(e): rational_to_text(c) for e, c in w.terms}


def weight_to_text(w: WeightPoly) -> str:
    return str(w)


def cone_to_dict(cone: Cone) -> Dict[str, Any]:
    return {
        "rays": [list(r) for r in cone.rays],
        "lineality": [list(v) for v in cone.lineality],
        "dimension": cone.dim,
    }


def cycle_to_dict(cycle: TropicalCycle) -> Dict[str, Any]:
    """Weighted cones ordered by dimension, then generators."""
    cones = []
    for cone in sorted(cycle.weighted_cones(), key=Cone.sort_key):
        entry = cone_to_dict(cone)
        entry["weight"] = weight_to_dict(cycle.weight(cone))
        entry["weight_text"] = weight_to_text(cycle.weight(cone))
        cones.append(entry)
    return {"lattice_rank": cycle.rank, "cones": cones}


def _vec(v) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def format_cycle_lines(cycle: TropicalCycle) -> List[str]:
    if cycle.is_zero:
        return ["  (zero cycle)"]
    lines = []
    for cone in sorted(cycle.weighted_cones(), key=Cone.sort_key):
        gens = " ".join(_vec(r) for r in cone.rays) or "origin"
        if cone.lineality:
            gens += "  lineality " + " ".join(_vec(v) for v in cone.lineality)
        lines.append(f"  dim {cone.dim}  {gens}  weight {weight_to_text(cycle.weight(cone))}")
    return lines


def dumps_report(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
