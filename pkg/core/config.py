from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache

class Settings(BaseSettings):
    # App Config
    APP_NAME: str = "sl21-workbench"
    LOG_LEVEL: str = "INFO"

    # Parallelism (overridden per call by --threads)
    THREADS: int = Field(1, ge=1)

    # Rewriting memo table; 0 means unbounded
    MEMO_MAX_ENTRIES: int = Field(2_000_000, ge=0)

    # Persistence
    STATE_SCHEMA_VERSION: int = 1
    JSON_INDENT: int = 2

    # Environment only, no settings file
    model_config = SettingsConfigDict(env_prefix="SL21_")

@lru_cache()
def get_settings():
    return Settings()
