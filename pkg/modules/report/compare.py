from __future__ import annotations

from typing import Any, Dict, Tuple


def _chi_values(report: Dict[str, Any]) -> Dict[str, str]:
    out = {}
    for section, data in report.items():
        if isinstance(data, dict) and isinstance(data.get("chi_y"), dict):
            out[section] = data["chi_y"].get("text")
    return out


def _cone_map(report: Dict[str, Any]) -> Dict[Tuple[str, str], Dict[str, str]]:
    out = {}
    for section, data in report.items():
        if not isinstance(data, dict) or not isinstance(data.get("cycle"), dict):
            continue
        for cone in data["cycle"].get("cones", []):
            key = (section, f"{cone.get('rays')}|{cone.get('lineality')}")
            out[key] = cone.get("weight", {})
    return out


def diff_reports(old: Dict[str, Any], new: Dict[str, Any]) -> Dict[str, Any]:
    """Differences between two saved CLI reports."""
    old_chi, new_chi = _chi_values(old), _chi_values(new)
    chi_changes = [
        {"section": s, "old": old_chi.get(s), "new": new_chi.get(s)}
        for s in sorted(set(old_chi) | set(new_chi))
        if old_chi.get(s) != new_chi.get(s)
    ]

    old_cones, new_cones = _cone_map(old), _cone_map(new)
    added = sorted(set(new_cones) - set(old_cones))
    removed = sorted(set(old_cones) - set(new_cones))
    weight_changes = [
        {"section": k[0], "cone": k[1], "old": old_cones[k], "new": new_cones[k]}
        for k in sorted(set(old_cones) & set(new_cones))
        if old_cones[k] != new_cones[k]
    ]
    return {
        "chi_y_changes": chi_changes,
        "added_cones": [{"section": s, "cone": c} for s, c in added],
        "removed_cones": [{"section": s, "cone": c} for s, c in removed],
        "weight_changes": weight_changes,
    }
