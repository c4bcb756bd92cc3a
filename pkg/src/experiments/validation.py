"""Configuration diagnostics."""
from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import ValidationError

from ..config import Config
from ..errors import ConfigInvalidError


def format_validation_error(error: ValidationError) -> list[str]:
    """One ``"<field path>: <message>"`` line per pydantic error."""
    diagnostics = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "config"
        diagnostics.append(f"{location}: {item['msg']}")
    return diagnostics


def _load(path: Path) -> tuple[Config | None, list[str]]:
    try:
        return Config.from_file(path), []
    except ValidationError as e:
        return None, format_validation_error(e)
    except yaml.YAMLError as e:
        return None, [f"{path.name}: not valid YAML ({e})"]
    except (TypeError, ValueError) as e:
        return None, [f"{path.name}: {e}"]


def validate_config(path: str | Path) -> list[str]:
    """Schema and cross-reference diagnostics; an empty list means the config is valid.

    Raises
    ------
    FileNotFoundError
        If ``path`` does not exist.
    """
    path = Path(path).expanduser()
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")

    config, diagnostics = _load(path)
    if config is None:
        return diagnostics
    return config.reference_errors()


def load_config(path: str | Path) -> Config:
    """Load a config that passes every check.

    Raises
    ------
    FileNotFoundError
        If ``path`` does not exist.
    ConfigInvalidError
        With the diagnostics of ``validate_config``.
    """
    path = Path(path).expanduser()
    if not path.exists():
        raise FileNotFoundError(f"Configuration file not found: {path}")

    config, diagnostics = _load(path)
    if config is None:
        raise ConfigInvalidError(diagnostics)
    errors = config.reference_errors()
    if errors:
        raise ConfigInvalidError(errors)
    return config
