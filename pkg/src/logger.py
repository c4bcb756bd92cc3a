"""Logger utility class for application-wide logging configuration."""

import logging
import sys
from typing import Optional

from .config import Config


class Logger:
    """Static logger utility class for configuring the root logger."""

    @staticmethod
    def setup(config: Optional[Config] = None) -> None:
        """Send plain messages to stdout at the configured level (INFO without a config)."""
        level = config.logging.get_level() if config is not None else logging.INFO
        logging.basicConfig(
            level=level,
            format="%(message)s",
            stream=sys.stdout,
            force=True,  # Override any existing configuration
        )
        # numpy/scipy warnings surface through logging rather than stderr
        logging.captureWarnings(True)
