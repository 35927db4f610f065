from __future__ import annotations

from typing import Any, Dict, List, Sequence

from ..base_module import RefinedTropModule
from ..chigenus import (
    chi_y,
    dhn_chi_y,
    refined_trop,
    specialization_details,
    unrefined_trop,
)
from ..polyalgebra import PolytopeCombination, is_zero_in_algebra, power
from ..polytope import LatticePolytope
from ..report import derive_issues
from ..tropcycle import (
    DEFAULT_RETRIES,
    TropicalCycle,
    cycle_equal,
    hypersurface_series,
    is_balanced,
    stable_intersection,
)


def _balance_entry(cycle: TropicalCycle) -> Dict[str, Any]:
    report = is_balanced(cycle)
    return {
        "passed": report.balanced,
        "violations": [f"{tau} exponent {e}" for tau, e, _ in report.violations],
    }


class ConsistencyChecker(RefinedTropModule):
    """Runs the structural identities on a selection and reports failures as issues."""

    def __init__(self, config=None):
        super().__init__(config=config)
        self.seed = self.config.get("displacement_seed")
        self.retries = int(self.config.get("displacement_retries", DEFAULT_RETRIES))

    def _product_rule(self, deltas: Sequence[LatticePolytope], n: int, whole: TropicalCycle) -> Dict[str, Any]:
        left, right = list(deltas[:1]), list(deltas[1:])
        product = stable_intersection(
            refined_trop(left, n), refined_trop(right, n), seed=self.seed, retries=self.retries
        )
        return {"passed": cycle_equal(whole, product), "split": f"{len(left)} + {len(right)} polytopes"}

    def run_checks(self, deltas: Sequence[LatticePolytope], n: int, names: Sequence[str]) -> Dict[str, Any]:
        k = len(deltas)
        checks: Dict[str, Any] = {"lattice_rank": n, "codim": k}

        failures: List[str] = []
        for name, delta in zip(names, deltas):
            one = PolytopeCombination.unit(n)
            if not is_zero_in_algebra(power(one - PolytopeCombination.of(delta), n + 1)):
                failures.append(name)
        checks["nilpotency_failures"] = failures

        factored = chi_y(deltas, n, slow_checks=self.slow_checks)
        oracle = dhn_chi_y(deltas, n)
        checks["pipelines"] = {
            "agreement": factored == oracle,
            "values": {"factored": str(factored), "dhn": str(oracle)},
        }

        if 1 <= k <= n:
            refined = refined_trop(deltas, n)
            unrefined = unrefined_trop(deltas, n, seed=self.seed, retries=self.retries)
            self.logger.debug("refined cycle has %d weighted cones", len(refined.weighted_cones()))
            checks["balanced_refined"] = _balance_entry(refined)
            checks["balanced_unrefined"] = _balance_entry(unrefined)
            special = specialization_details(deltas, n, refined=refined, unrefined=unrefined)
            checks["specialization"] = {
                "support_equal": special.support_equal,
                "top_matches": special.top_matches,
            }
            if k >= 2:
                checks["product_rule"] = self._product_rule(deltas, n, refined)
            if k == 1:
                series = hypersurface_series(deltas[0], seed=self.seed, retries=self.retries)
                checks["hypersurface_series"] = {"passed": cycle_equal(refined, series)}
        return checks

    def analyze(self, session, names: Sequence[str]) -> dict:
        deltas = self.resolve(session, names)
        checks = self.run_checks(deltas, session.lattice_rank, names)
        subject = ",".join(names) or "torus"
        issues = [i.to_dict() for i in derive_issues(subject, checks)]
        checks["issues"] = issues
        checks["passed"] = not any(i["severity"] == "error" for i in issues)
        checks["polytopes"] = list(names)
        return {self.module_name: checks}
