"""
Configuration Management for logkernel

This module provides centralized configuration using Pydantic Settings.
Settings are loaded from environment variables (prefix ``LOGKERNEL_``) or a
``.env`` file and only govern diagnostics and concurrency. Numerical results
never depend on the environment; numeric knobs live in QuadConfig, SeriesSpec
and VerifyConfig.

Usage:
    from logkernel.config import get_settings

    log_level = get_settings().log_level
    workers = get_settings().max_workers
"""

import math
from functools import lru_cache
from typing import Literal

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from logkernel.exceptions import ConfigurationError


# Type aliases for clarity
LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
LogFormat = Literal["json", "text"]


class Settings(BaseSettings):
    """
    Toolkit settings loaded from environment variables.

    Example .env:
        LOGKERNEL_LOG_LEVEL=DEBUG
        LOGKERNEL_LOG_FORMAT=json
        LOGKERNEL_MAX_WORKERS=8

    Attributes:
        log_level: Global logging level
        log_format: Log format (json or text)
        log_to_file: Whether to also log to a file
        log_file_path: Path to log file
        log_series_diagnostics: Log per-engine summation diagnostics at DEBUG

        max_workers: Thread pool size for run_suite
    """

    model_config = SettingsConfigDict(
        env_prefix="LOGKERNEL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # ===========================================
    # Logging Configuration
    # ===========================================
    log_level: LogLevel = "WARNING"
    log_format: LogFormat = "text"
    log_to_file: bool = False
    log_file_path: str = "logs/logkernel.log"
    log_series_diagnostics: bool = False

    # ===========================================
    # Execution
    # ===========================================
    max_workers: int = Field(default=4, ge=1)


class NumericDefaults:
    """
    Default numeric parameters shared by the harness and the CLI.

    These are constants, not settings: changing them changes results.
    """

    A_GRID: tuple[float, ...] = (0.5, 1.0, math.pi / 2, math.pi, 2.0, 2 * math.pi, 5.0)
    TOL: float = 1e-9
    QUAD_TOL: float = 1e-12
    DIRECT_MAX_TERMS: int = 1_000_000
    ACCELERATED_MAX_TERMS: int = 100_000
    K_MAX: int = 40

    # Minimum distance of `a` from an odd multiple of pi for identities 3, 4, 10
    ODD_PI_EXCLUSION: float = 1e-6

    @classmethod
    def max_terms_for_mode(cls, mode: str) -> int:
        """Default term budget for a summation mode."""
        if mode in ("direct", "tail_corrected"):
            return cls.DIRECT_MAX_TERMS
        return cls.ACCELERATED_MAX_TERMS


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Returns:
        Settings instance loaded from environment

    Raises:
        ConfigurationError: an environment variable failed validation
    """
    try:
        return Settings()
    except ValidationError as e:
        first = e.errors()[0]
        setting = ".".join(str(part) for part in first["loc"]) or "settings"
        raise ConfigurationError(f"LOGKERNEL_{setting.upper()}", first["msg"]) from e
