"""
Runtime configuration
Values come from DEZA_* environment variables or a local .env file
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Canonical labeling and orderly generation are only exercised up to here.
HARD_MAX_N = 16


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="DEZA_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    max_n: int = Field(default=12, ge=1, le=HARD_MAX_N, description="Largest n the enumerator accepts")
    workers: int = Field(default=1, ge=1, description="Worker processes for enumeration")
    search_node_limit: Optional[int] = Field(default=None, ge=1, description="Search nodes per work unit")
    log_level: str = Field(default="WARNING", description="Root log level for the CLI")

    @field_validator("log_level")
    @classmethod
    def _normalize_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level


@lru_cache()
def get_settings() -> Settings:
    return Settings()
