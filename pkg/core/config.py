import os
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from core.errors import ConfigError

logger = logging.getLogger(__name__)

REPO_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_MAX_N = 6
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """Runtime settings read from the environment (and a .env file if present)"""
    max_n: int = DEFAULT_MAX_N
    log_level: str = "WARNING"
    golden_dir: Path = REPO_ROOT / "golden"


def load_environment(dotenv_path: Optional[str] = None) -> Settings:
    """Load and validate BCHLAB_* environment variables"""
    load_dotenv(dotenv_path)

    raw_max_n = os.getenv("BCHLAB_MAX_N")
    max_n = DEFAULT_MAX_N
    if raw_max_n:
        try:
            max_n = int(raw_max_n)
        except ValueError:
            raise ConfigError(f"BCHLAB_MAX_N must be an integer, got {raw_max_n!r}")
        if max_n < 1:
            raise ConfigError(f"BCHLAB_MAX_N must be positive, got {max_n}")

    log_level = (os.getenv("BCHLAB_LOG_LEVEL") or "WARNING").upper()
    if log_level not in LOG_LEVELS:
        raise ConfigError(f"BCHLAB_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}, got {log_level!r}")

    golden_dir = Path(os.getenv("BCHLAB_GOLDEN_DIR") or REPO_ROOT / "golden")
    if not golden_dir.is_dir():
        logger.warning(f"Golden directory {golden_dir} does not exist")

    settings = Settings(max_n=max_n, log_level=log_level, golden_dir=golden_dir)
    logger.debug(f"Loaded settings: {settings}")
    return settings
