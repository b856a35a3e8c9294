"""Settings and artifact writers shared by the CLI and use cases."""

from .artifacts import FAILURE_FILE, PROVENANCE_FILE, ArtifactStore
from .config import Settings, get_settings, load_lab_config, parse_lab_config

__all__ = [
    "FAILURE_FILE",
    "PROVENANCE_FILE",
    "ArtifactStore",
    "Settings",
    "get_settings",
    "load_lab_config",
    "parse_lab_config",
]
