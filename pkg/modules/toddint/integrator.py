from __future__ import annotations

from typing import Sequence

from ..base_module import RefinedTropModule
from ..chigenus import GENERICITY_NOTE, refined_trop
from ..report import weight_to_dict, weight_to_text
from .measure import ToddMeasure, check_additivity, chi_y_via_todd, integrate


class ToddIntegrator(RefinedTropModule):
    """Integrates refined tropicalizations against a Todd measure."""

    def __init__(self, config=None):
        super().__init__(config=config)
        self.cross_check = bool(self.config.get("cross_check", True))

    def measure(self, session) -> ToddMeasure:
        if not session.measure_table:
            return ToddMeasure()
        mu = ToddMeasure.from_entries(session.measure_table, session.lattice_rank)
        for v in check_additivity(mu):
            self.logger.warning("Todd table not additive on %s: %s != %s", v.cone, v.value, v.pieces_sum)
        return mu

    def analyze(self, session, names: Sequence[str]) -> dict:
        deltas = self.resolve(session, names)
        n = session.lattice_rank
        mu = self.measure(session)
        integral = integrate(refined_trop(deltas, n), mu)
        poly = chi_y_via_todd(deltas, mu, n, cross_check=self.cross_check)
        return {
            self.module_name: {
                "polytopes": list(names),
                "integral": weight_to_dict(integral),
                "integral_text": weight_to_text(integral),
                "chi_y": poly.to_dict(),
                "pipeline": "todd",
                "note": GENERICITY_NOTE,
            }
        }
