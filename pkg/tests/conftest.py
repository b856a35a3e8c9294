"""Shared test fixtures."""

from __future__ import annotations

import sys
from collections.abc import Iterator
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.platform.config import get_settings  # noqa: E402


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Iterator[None]:
    """Point artifacts at a temporary directory and clear the settings cache."""
    monkeypatch.setenv("LAB_OUT_DIR", str(tmp_path / "lab-out"))
    monkeypatch.delenv("LAB_THREADS", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
