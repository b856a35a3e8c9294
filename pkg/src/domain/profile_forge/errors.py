"""Profile errors."""

from __future__ import annotations

from ..errors import LabConfigError


class ProfileError(LabConfigError):
    """Raised when a profile or its parameters cannot produce admissible sequences."""

    def __init__(self, message: str, *, profile: str | None = None, **details: object) -> None:
        super().__init__(message, profile=profile, **details)
        self.profile = profile


__all__ = ["ProfileError"]
