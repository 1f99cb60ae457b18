"""
Shared fixtures for the unit tests
"""
import pytest

from exactreal.config import get_settings
from exactreal.services.evaluator import EvalConfig


@pytest.fixture
def cfg():
    """Default precision schedule, independent of the environment"""
    return EvalConfig()


@pytest.fixture
def small_cap():
    """Precision schedule with a low cap, for exhaustion paths"""
    return EvalConfig(initial_precision=64, precision_growth=2, max_precision=256)


@pytest.fixture
def settings_env(monkeypatch):
    """Set EXACTREAL_* variables and rebuild the cached settings"""
    def apply(**values):
        for key, value in values.items():
            monkeypatch.setenv(f"EXACTREAL_{key}", str(value))
        get_settings.cache_clear()
        return get_settings()

    yield apply
    get_settings.cache_clear()
