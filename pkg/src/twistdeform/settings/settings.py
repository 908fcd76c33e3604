"""Environment-driven defaults for runs, the CLI and the HTTP adapter."""
import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Settings:
    order: int
    workers: int
    star_safety_order: int
    log_level: str


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def get_settings() -> Settings:
    """Read the environment on every call; also the FastAPI dependency."""
    return Settings(
        order=_int_env("TWISTDEFORM_ORDER", 4),
        workers=_int_env("TWISTDEFORM_WORKERS", 1),
        star_safety_order=_int_env("TWISTDEFORM_STAR_SAFETY_ORDER", 8),
        log_level=os.getenv("TWISTDEFORM_LOG_LEVEL", "WARNING").upper(),
    )
