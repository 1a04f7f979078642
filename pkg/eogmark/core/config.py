# eogmark/core/config.py
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment."""

    model_config = SettingsConfigDict(
        env_prefix="EOGMARK_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # Quantization
    default_scale: int = Field(default=1_000_000, ge=1)

    # Embedding region
    default_offset: int = Field(default=0, ge=0)
    default_length: int = Field(default=128, gt=0, multiple_of=2)

    # Blink detector
    blink_threshold_sigmas: float = Field(default=2.0, gt=0.0)
    blink_refractory_seconds: float = Field(default=0.2, ge=0.0)

    # Application
    codec: str = "difference_expansion"
    log_level: str = "WARNING"


# Global settings instance (lazy-loaded)
_settings: Settings | None = None


def get_settings() -> Settings:
    """Get the global settings instance, creating it if necessary."""
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


class _SettingsProxy:
    """Proxy to allow lazy loading of settings while maintaining simple access pattern."""

    def __getattr__(self, name: str):
        return getattr(get_settings(), name)


settings = _SettingsProxy()  # type: ignore
