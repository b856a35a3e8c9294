from __future__ import annotations

from dataclasses import dataclass

from ..domain.delta_core import DeltaGroup
from ..models.lab import LabConfig, LabTask
from ..platform.artifacts import ArtifactStore
from ..platform.config import Settings
from .instances import build_delta


@dataclass(frozen=True)
class LabContext:
    """Resolved run parameters shared by every task of one invocation."""

    config: LabConfig
    store: ArtifactStore
    budget: int
    seed: int

    @classmethod
    def of(cls, config: LabConfig, settings: Settings, store: ArtifactStore) -> LabContext:
        budget = config.budget if config.budget is not None else settings.enumeration_budget
        seed = config.seed if config.seed is not None else settings.seed
        return cls(config=config, store=store, budget=budget, seed=seed)

    @property
    def kappa(self) -> int:
        return self.config.kappa

    def source_delta(self) -> DeltaGroup:
        return build_delta(self.config.source, self.config.kappa)

    def target_delta(self) -> DeltaGroup:
        return build_delta(self.config.target, self.config.kappa)

    def n_values(self, task: LabTask) -> list[int]:
        return list(task.n) if task.n else list(self.config.n_values)


__all__ = ["LabContext"]
