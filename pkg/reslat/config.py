"""Configuration management using Pydantic BaseSettings."""
from functools import lru_cache
from typing import Optional, Tuple, Type

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    """Workbench settings.

    Only keyword arguments are read. Environment variables and dotenv files
    are ignored so that every run is fully described by its command line.
    """

    model_config = SettingsConfigDict(
        case_sensitive=True,
        extra="ignore",
    )

    # Equation checking
    CONJUGATE_DEPTH: int = Field(default=2, ge=0, description="Iterated conjugate depth for equation schemes")

    # Enumeration
    ENUMERATION_CAP: Optional[int] = Field(default=None, ge=1, description="Maximum number of algebras to return")
    ENUMERATION_JOBS: int = Field(default=1, ge=1, description="Worker threads for prefix enumeration")
    ENUMERATION_MAX_X_SIZE: int = Field(default=3, ge=0, description="Largest |X| enumerated without a warning")

    # Constructions
    CROSS_CHECK_DIVISIONS: bool = Field(
        default=True,
        description="Compare closed-form division tables against derived residuals",
    )

    # Logging
    LOG_LEVEL: str = Field(default="WARNING", description="Root log level for the command line")

    @field_validator("LOG_LEVEL")
    @classmethod
    def known_level(cls, v: str) -> str:
        """Normalise and validate the log level name."""
        level = v.upper()
        if level not in _LOG_LEVELS:
            raise ValueError(f"LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}")
        return level

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
