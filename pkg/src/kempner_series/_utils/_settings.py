from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class KempnerSettings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    max_enum: int = Field(default=10**8, ge=1, alias="KEMPNER_MAX_ENUM")
    max_scan: int = Field(default=10**9, ge=1, alias="KEMPNER_MAX_SCAN")
    interval_precision: int = Field(
        default=113, ge=53, alias="KEMPNER_INTERVAL_PREC"
    )
    log_level: str = Field(default="WARNING", alias="KEMPNER_LOG_LEVEL")


def get_settings() -> KempnerSettings:
    """Read the settings from the environment (and `.env`) on every call."""
    return KempnerSettings()
