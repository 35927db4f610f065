from __future__ import annotations

from typing import Any, Dict, Optional, Sequence

from ..base_module import RefinedTropModule
from ..errors import InputValidationError
from ..polytope import LatticePolytope
from ..tropcycle import DEFAULT_RETRIES, TropicalCycle, rational_to_text
from .dhn import dhn_chi_y
from .formulas import chi_y, chi_y_closed_form_2d, chi_y_genus_form_2d, mixed_volume_count
from .polynomial import GENERICITY_NOTE, ChiPolynomial
from .tropical import refined_trop, unrefined_trop

PIPELINES = ("factored", "dhn", "todd", "closed_form_2d", "genus_form_2d")


class ChiGenusAnalyzer(RefinedTropModule):
    """Computes chi_y by one pipeline, or by every applicable one and compares."""

    def __init__(self, config=None):
        super().__init__(config=config)
        self.check_vanishing = bool(self.config.get("check_vanishing", True))
        self.all_pipelines = bool(self.config.get("all_pipelines", False))
        self.dhn_workers = int(self.config.get("dhn_workers", 1))

    def applicable(self, name: str, deltas: Sequence[LatticePolytope], n: int, session=None) -> Optional[str]:
        """None when the pipeline can run, otherwise the reason it is skipped."""
        k = len(deltas)
        if name == "todd":
            if k == 0:
                return "needs at least one polytope"
            has_table = bool(session is not None and session.measure_table)
            if n - k > 1 and not has_table:
                return "default Todd measure covers cycles of dimension <= 1 only"
        if name in ("closed_form_2d", "genus_form_2d"):
            if n != 2 or k != 1 or deltas[0].dim != 2:
                return "needs a single full-dimensional polygon"
        return None

    def run_pipeline(self, name: str, deltas: Sequence[LatticePolytope], n: int, session=None) -> ChiPolynomial:
        if name == "factored":
            return chi_y(deltas, n, check_vanishing=self.check_vanishing, slow_checks=self.slow_checks)
        if name == "dhn":
            return dhn_chi_y(deltas, n, workers=self.dhn_workers)
        if name == "todd":
            from ..toddint import ToddMeasure, chi_y_via_todd

            table = session.measure_table if session is not None else []
            mu = ToddMeasure.from_entries(table, n) if table else ToddMeasure()
            return chi_y_via_todd(deltas, mu, n, cross_check=False)
        if name == "closed_form_2d":
            return chi_y_closed_form_2d(deltas[0])
        if name == "genus_form_2d":
            return chi_y_genus_form_2d(deltas[0])
        raise ValueError(f"unknown pipeline '{name}'")

    def compute(
        self, deltas: Sequence[LatticePolytope], n: int, pipeline: str = "factored", all_pipelines=None, session=None
    ) -> Dict[str, Any]:
        run_all = self.all_pipelines if all_pipelines is None else all_pipelines
        names = [p for p in PIPELINES if run_all or p == pipeline]
        values: Dict[str, ChiPolynomial] = {}
        skipped: Dict[str, str] = {}
        for name in names:
            reason = self.applicable(name, deltas, n, session)
            if reason:
                skipped[name] = reason
                continue
            self.logger.debug("running pipeline %s", name)
            values[name] = self.run_pipeline(name, deltas, n, session)
        if not values:
            raise InputValidationError(f"pipeline '{pipeline}' does not apply: {skipped.get(pipeline)}")
        chosen = pipeline if pipeline in values else next(iter(values))
        primary = values[chosen]
        agreement = len({v for v in values.values()}) <= 1
        results: Dict[str, Any] = {
            "lattice_rank": n,
            "codim": len(deltas),
            "pipeline": chosen,
            "chi_y": primary.to_dict(),
            "pipelines": {k: str(v) for k, v in values.items()},
            "skipped_pipelines": skipped,
            "agreement": agreement,
            "note": GENERICITY_NOTE,
        }
        if deltas and len(deltas) == n:
            results["mixed_volume"] = rational_to_text(mixed_volume_count(deltas))
        return results

    def analyze(self, session, names: Sequence[str], pipeline: str = "factored", all_pipelines=None) -> dict:
        deltas = self.resolve(session, names)
        results = self.compute(deltas, session.lattice_rank, pipeline, all_pipelines, session)
        results["polytopes"] = list(names)
        return {self.module_name: results}


class TropicalAnalyzer(RefinedTropModule):
    """Refined (tropy) and unrefined (trop) tropicalizations of a session selection."""

    def __init__(self, config=None):
        super().__init__(config=config)
        self.seed = self.config.get("displacement_seed")
        self.retries = int(self.config.get("displacement_retries", DEFAULT_RETRIES))
        self.cycle: Optional[TropicalCycle] = None

    def compute(self, deltas: Sequence[LatticePolytope], n: int, refined: bool = True) -> TropicalCycle:
        if refined:
            return refined_trop(deltas, n)
        return unrefined_trop(deltas, n, seed=self.seed, retries=self.retries)

    def analyze(self, session, names: Sequence[str], refined: bool = True) -> dict:
        from ..report import cycle_to_dict

        deltas = self.resolve(session, names)
        cycle = self.compute(deltas, session.lattice_rank, refined)
        self.cycle = cycle
        return {
            self.module_name: {
                "polytopes": list(names),
                "kind": "refined" if refined else "unrefined",
                "cycle": cycle_to_dict(cycle),
                "note": GENERICITY_NOTE,
            }
        }
