"""Application settings and configuration"""
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional


class Settings(BaseSettings):
    """Pipeline configuration, read from TEMPOGRAPH_* environment variables"""

    # Logging verbosity (TEMPOGRAPH_LOG): DEBUG, INFO, WARNING, ERROR
    log: str = "WARNING"

    # Run defaults, overridable per invocation
    workers: int = 1
    variant: str = "dt2qt"
    mode: str = "err"
    merge3: bool = False

    # Character budget for long contexts; None disables truncation
    context_char_budget: Optional[int] = None

    # Alternative golden composition table (defaults to the packaged file)
    composition_table_path: Optional[str] = None

    model_config = SettingsConfigDict(
        env_prefix="TEMPOGRAPH_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


settings = Settings()
