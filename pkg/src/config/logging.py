"""Logging configuration."""

import logging

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


class LoggingConfig(BaseSettings):
    """Logging configuration."""

    level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
    )

    @field_validator("level")
    @classmethod
    def normalize_level(cls, value: str) -> str:
        return value.strip().upper()

    def get_level(self) -> int:
        """Logging constant for ``level``; unknown names fall back to INFO."""
        return LEVELS.get(self.level, logging.INFO)
