"""
wordperiods Configuration
Budgets and defaults, read from constructor arguments and an optional TOML file.
Environment variables are deliberately not consulted.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Literal

from pydantic import Field, ValidationError as PydanticValidationError
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)

from wordperiods.core.exceptions import ValidationError

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings(BaseSettings):
    model_config = SettingsConfigDict(extra="ignore")

    # Identity
    app_name: str = "wordperiods"

    # Compute budgets
    budget_enum: int = Field(default=2**26, ge=1)  # max ℓ^n for exhaustive enumeration
    budget_n: int = Field(default=512, ge=1)       # max finite length n* for limits
    budget_r: int = Field(default=512, ge=1)       # max border cutoff R for α

    # Precision
    default_digits: int = Field(default=20, ge=1)
    guard_digits: int = Field(default=3, ge=0)

    # Runtime
    jobs: int = Field(default=1, ge=1)
    log_level: LogLevel = "WARNING"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # flags and the config file are the only sources
        return (init_settings,)


def load_settings(config_file: Path | None = None, **overrides: Any) -> Settings:
    """
    Build Settings from an optional TOML file, then apply overrides.

    Overrides whose value is None are ignored so argparse defaults
    never mask values from the file.
    """
    values: dict[str, Any] = {}
    if config_file is not None:
        if not Path(config_file).is_file():
            raise ValidationError(f"Config file not found: {config_file}")
        values.update(TomlConfigSettingsSource(Settings, toml_file=config_file)())
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings(**values)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid configuration: {e}") from e


settings = Settings()
