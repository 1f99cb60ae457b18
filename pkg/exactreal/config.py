"""
Configuration settings for exactreal
"""
import logging
import sys
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict
from pythonjsonlogger import jsonlogger

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Settings(BaseSettings):
    """Application settings, overridable through EXACTREAL_* environment variables"""

    # Application
    APP_NAME: str = "exactreal"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Precision restart loop
    INITIAL_PREC: int = 64
    PRECISION_GROWTH: int = 2
    MAX_PREC: int = 2 ** 24

    # Exponential-cost algorithms
    GRID_CAP: int = 2 ** 26  # sample points for MAX / integration
    STEP_CAP: int = 2 ** 26  # Euler steps

    # Logistic map demo
    RATIONAL_STEP_CAP: int = 16  # bit length of x_m doubles every step
    LOGISTIC_BUDGET_S: float = 60.0

    # Logging
    LOG_LEVEL: str = "WARNING"
    LOG_JSON: bool = False

    model_config = SettingsConfigDict(
        env_prefix="EXACTREAL_",
        env_file=".env",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


def configure_logging(level: str = None, json_format: bool = None) -> None:
    """
    Install the root handler on stderr

    Args:
        level: Log level name; defaults to Settings.LOG_LEVEL
        json_format: Emit JSON records; defaults to Settings.LOG_JSON
    """
    settings = get_settings()
    level = level or settings.LOG_LEVEL
    json_format = settings.LOG_JSON if json_format is None else json_format

    handler = logging.StreamHandler(sys.stderr)
    if json_format:
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT))

    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(level.upper())
