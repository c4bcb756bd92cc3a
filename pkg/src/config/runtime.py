"""Worker and chunking configuration, with the environment cap on workers."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.ggqm.constants import DEFAULT_CHUNK_SIZE, DEFAULT_WORKERS

from .constants import ENV_PREFIX


class RuntimeSettings(BaseSettings):
    """Settings read from ``QMC_*`` environment variables."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX)

    max_workers: Optional[int] = Field(
        default=None,
        description="Upper bound on worker processes, whatever the config file asks for",
        ge=1,
    )


class RuntimeConfig(BaseSettings):
    """Worker and chunking configuration.

    Results never depend on these values; they only change the wall time.
    """

    workers: int = Field(
        default=DEFAULT_WORKERS,
        description="Worker processes for Monte-Carlo sampling (1 runs in-process)",
        ge=1,
    )
    chunk_size: int = Field(
        default=DEFAULT_CHUNK_SIZE,
        description="Samples per worker call",
        gt=0,
    )

    def effective_workers(self) -> int:
        """``workers`` capped by ``QMC_MAX_WORKERS`` when it is set."""
        cap = RuntimeSettings().max_workers
        return self.workers if cap is None else min(self.workers, cap)
