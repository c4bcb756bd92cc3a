"""Output paths configuration."""

from pathlib import Path
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings

from .constants import DEFAULT_OUTPUT_DIR


class PathsConfig(BaseSettings):
    """Output paths configuration."""

    output_dir: Path = Field(
        default=Path(DEFAULT_OUTPUT_DIR),
        description=(
            "Directory receiving report.txt, the CSV tables and serialized grids "
            "(relative to current working directory)"
        ),
    )
    dump_dir: Optional[Path] = Field(
        default=None,
        description="Directory receiving loops whose word cannot be read; unset disables dumps",
    )

    def experiment_dir(self, experiment: str) -> Path:
        """Directory holding the outputs of one experiment."""
        return self.output_dir / experiment
