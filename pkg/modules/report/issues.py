from __future__ import annotations

from dataclasses import dataclass, asdict
from typing import Any, Dict, List


@dataclass
class Issue:
    subject: str
    code: str
    title: str
    severity: str  # error | warning | notice
    category: str  # balancing | specialization | product | algebra | pipelines
    details: str

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def derive_issues(subject: str, checks: Dict[str, Any]) -> List[Issue]:
    """Turn the ConsistencyChecker result dict into Issue records."""
    issues: List[Issue] = []

    bal = checks.get("balanced_refined") or {}
    if bal and not bal.get("passed"):
        issues.append(Issue(subject, "UNBALANCED_REFINED", "Refined tropicalization is not balanced", "error", "balancing", "; ".join(bal.get("violations", []))))
    bal = checks.get("balanced_unrefined") or {}
    if bal and not bal.get("passed"):
        issues.append(Issue(subject, "UNBALANCED_UNREFINED", "Stable intersection is not balanced", "error", "balancing", "; ".join(bal.get("violations", []))))

    special = checks.get("specialization") or {}
    if special and not special.get("support_equal", True):
        issues.append(Issue(subject, "SUPPORT_MISMATCH", "Supports of refined and unrefined tropicalizations differ", "error", "specialization", "compare the cone lists of tropy and trop"))
    if special and not special.get("top_matches", True):
        issues.append(Issue(subject, "SPECIALIZATION_FAILED", "Top component at y=0 is not (-1)^k Trop", "error", "specialization", "evaluate the refined weights at y=0"))

    prod = checks.get("product_rule") or {}
    if prod and not prod.get("passed", True):
        issues.append(Issue(subject, "PRODUCT_RULE", "Refined tropicalization is not multiplicative", "error", "product", prod.get("split", "")))

    for name in checks.get("nilpotency_failures", []):
        issues.append(Issue(subject, "NOT_NILPOTENT", f"(1-[{name}])^(n+1) is not zero", "error", "algebra", "Chern image of the power is nonzero"))

    hyp = checks.get("hypersurface_series") or {}
    if hyp and not hyp.get("passed", True):
        issues.append(Issue(subject, "SERIES_MISMATCH", "Cycle-ring hypersurface series differs from refined_trop", "error", "pipelines", ""))

    pipes = checks.get("pipelines") or {}
    if pipes and not pipes.get("agreement", True):
        values = ", ".join(f"{k}={v}" for k, v in sorted((pipes.get("values") or {}).items()))
        issues.append(Issue(subject, "PIPELINE_DISAGREEMENT", "chi_y pipelines disagree", "error", "pipelines", values))

    if checks.get("codim", 0) > checks.get("lattice_rank", 0):
        issues.append(Issue(subject, "EMPTY_INTERSECTION", "More equations than the torus dimension", "notice", "pipelines", "the generic intersection is empty"))
    return issues
