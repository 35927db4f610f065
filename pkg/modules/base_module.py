# modules/base_module.py
import logging
from abc import ABC, abstractmethod
from typing import List, Sequence

from .polytope import LatticePolytope


class RefinedTropModule(ABC):
    """
    Abstract base class for the analysis modules driven by the CLI.
    Each module implements its own 'analyze' method over a loaded session.
    """

    def __init__(self, config=None):
        self.module_name = self.__class__.__name__
        self.config = config if config else {}
        self.global_config = self.config.get("Global", {})
        self.logger = logging.getLogger(f"modules.{self.module_name}")

    @abstractmethod
    def analyze(self, session, names: Sequence[str]) -> dict:
        """
        Runs the module on the named polytopes of a session.

        Returns:
            dict: ``{module_name: results}``, results being JSON-serializable.
        """
        pass

    def resolve(self, session, names: Sequence[str]) -> List[LatticePolytope]:
        return session.resolve(names)

    @property
    def slow_checks(self) -> bool:
        return bool(self.global_config.get("slow_checks"))

    def get_module_name(self) -> str:
        """Returns the name of the module."""
        return self.module_name
