"""Pytest fixtures for integration tests."""
import pytest
from fastapi.testclient import TestClient

from src.twistdeform.main import app


@pytest.fixture(scope="function")
def client():
    """Create a test client for the HTTP adapter."""
    test_client = TestClient(app)
    yield test_client
    app.dependency_overrides.clear()


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Unset TWISTDEFORM_* so defaults apply unless a test sets them."""
    for name in ("TWISTDEFORM_ORDER", "TWISTDEFORM_WORKERS", "TWISTDEFORM_STAR_SAFETY_ORDER",
                 "TWISTDEFORM_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
