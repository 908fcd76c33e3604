"""Settings package re-exports for easy imports from `src.twistdeform.settings`."""
from .settings import Settings, get_settings

__all__ = [
    "Settings",
    "get_settings",
]
