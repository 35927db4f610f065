from __future__ import annotations

import csv
from typing import Any, Dict, List

from ..tropcycle import Cone, TropicalCycle, rational_to_text

CONE_FIELDS = ["dimension", "rays", "lineality", "exponent", "coefficient"]
ISSUE_FIELDS = ["subject", "code", "title", "severity", "category", "details"]


def _vecs(vs) -> str:
    return " ".join("(" + ",".join(str(c) for c in v) + ")" for v in vs)


def export_cones_csv(path: str, cycle: TropicalCycle):
    """One row per weighted cone and (y-1)-exponent."""
    with open(path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=CONE_FIELDS)
        w.writeheader()
        for cone in sorted(cycle.weighted_cones(), key=Cone.sort_key):
            for e, c in cycle.weight(cone).terms:
                w.writerow({
                    "dimension": cone.dim,
                    "rays": _vecs(cone.rays),
                    "lineality": _vecs(cone.lineality),
                    "exponent": e,
                    "coefficient": rational_to_text(c),
                })


def export_issues_csv(path: str, issues: List[Dict[str, Any]]):
    with open(path, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=ISSUE_FIELDS)
        w.writeheader()
        for i in issues:
            w.writerow({k: i.get(k) for k in ISSUE_FIELDS})
