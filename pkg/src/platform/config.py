from __future__ import annotations

import json

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from functools import lru_cache
from pathlib import Path

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..domain.errors import LabConfigError
from ..models.lab import LabConfig


class Settings(BaseSettings):
    """Runtime settings loaded from ``LAB_*`` environment variables or ``.env``."""

    # Experiment parameters live in the --config file; the environment only
    # carries runtime knobs, so unrelated variables are ignored.
    model_config = SettingsConfigDict(
        env_prefix="LAB_", env_file=".env", case_sensitive=False, extra="ignore"
    )

    threads: int = Field(1, ge=1, description="Upper bound on concurrently running tasks")
    log_level: str = "INFO"
    out_dir: Path = Path("lab-out")
    enumeration_budget: int = Field(2_000_000, ge=1)
    seed: int = 0


@lru_cache()
def get_settings() -> Settings:
    return Settings()


def parse_lab_config(text: str, *, suffix: str = ".toml") -> LabConfig:
    """Validate a TOML (default) or JSON experiment description."""
    try:
        raw = json.loads(text) if suffix.lower() == ".json" else tomllib.loads(text)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as exc:
        raise LabConfigError(f"config is not valid {suffix.lstrip('.')}: {exc}") from exc
    try:
        return LabConfig.model_validate(raw)
    except ValidationError as exc:
        errors = [
            {"loc": ".".join(str(part) for part in error["loc"]), "msg": error["msg"]}
            for error in exc.errors()
        ]
        raise LabConfigError("config failed validation", errors=errors) from exc


def load_lab_config(path: Path | None) -> LabConfig:
    """Read ``path``; no path means the defaults with an empty task list."""
    if path is None:
        return LabConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LabConfigError(f"cannot read config: {exc}", path=str(path)) from exc
    return parse_lab_config(text, suffix=Path(path).suffix or ".toml")


__all__ = ["Settings", "get_settings", "load_lab_config", "parse_lab_config"]
