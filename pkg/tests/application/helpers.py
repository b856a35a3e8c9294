"""Factories for application tests."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from src.application import LabContext
from src.models.lab import LabConfig, LabTask
from src.platform import ArtifactStore, get_settings


def make_context(out: Path, **overrides: Any) -> LabContext:
    """Return a context over a default config with optional field overrides."""
    config = LabConfig.model_validate(overrides)
    return LabContext.of(config, get_settings(), ArtifactStore(out))


def make_task(name: str, **fields: Any) -> LabTask:
    return LabTask(name=name, **fields)
