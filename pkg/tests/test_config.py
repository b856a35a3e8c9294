"""Configuration loading tests."""

from fractions import Fraction
from pathlib import Path

import pytest

from src.domain.errors import LabConfigError
from src.platform.config import Settings, get_settings, load_lab_config, parse_lab_config


def test_settings_ignores_unrelated_environment_values(monkeypatch: pytest.MonkeyPatch) -> None:
    """Shared environment files may contain variables for other tools."""
    monkeypatch.setenv("LAB_THREADS", "4")
    monkeypatch.setenv("LAB_SOMETHING_ELSE", "ignored")

    settings = Settings()

    assert settings.threads == 4
    assert not hasattr(settings, "something_else")


def test_settings_point_at_the_temporary_out_dir(tmp_path: Path) -> None:
    assert get_settings().out_dir == tmp_path / "lab-out"


def test_toml_config_parses_exact_rationals() -> None:
    config = parse_lab_config(
        """
        kappa = 3
        delta = "1/8"
        n_values = [1, 2]

        [source_profile]
        family = "power"
        alpha = "1/2"

        [[tasks]]
        name = "zcoupling-verify"
        n = 1
        """
    )

    assert config.delta == Fraction(1, 8)
    assert config.source_profile.alpha == Fraction(1, 2)
    assert config.tasks[0].n == [1]
    assert config.target.kind == "s3_fiber"


def test_json_config_is_read_by_suffix(tmp_path: Path) -> None:
    path = tmp_path / "lab.json"
    path.write_text('{"kappa": 4, "tasks": [{"name": "oracle", "oracle": "diameter"}]}')

    config = load_lab_config(path)

    assert config.kappa == 4
    assert config.tasks[0].oracle == "diameter"


@pytest.mark.parametrize(
    "text",
    [
        "kappa = 2",
        'delta = "1/2"',
        "budget = 0",
        "n_values = []",
        "unknown_key = 1",
        '[[tasks]]\nname = "oracle"',
        '[[tasks]]\nname = "dance"',
        "kappa = ",
    ],
)
def test_invalid_configs_are_config_errors(text: str) -> None:
    with pytest.raises(LabConfigError):
        parse_lab_config(text)


def test_missing_config_file_is_a_config_error(tmp_path: Path) -> None:
    with pytest.raises(LabConfigError):
        load_lab_config(tmp_path / "absent.toml")


def test_no_config_means_defaults_without_tasks() -> None:
    config = load_lab_config(None)

    assert config.tasks == []
    assert config.kappa == 3
