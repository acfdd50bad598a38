"""Tests for the application factory."""

import pytest

from lindcalc import create_app
from lindcalc.config import DEFAULT_STABLE_MARGIN, Settings


def test_create_app_returns_flask_instance():
    """Test that create_app returns a Flask application instance."""
    app = create_app()

    assert app is not None
    assert app.name == "lindcalc"


def test_create_app_with_custom_config():
    """Test that create_app accepts custom configuration."""
    app = create_app({"TESTING": True, "TPQ_BOUND": 4})

    assert app.config["TESTING"] is True
    assert app.extensions["lindcalc.settings"].tpq_bound == 4


def test_settings_default_from_env():
    """Test that settings fall back to the defaults without LINDCALC_* variables."""
    app = create_app()

    assert app.extensions["lindcalc.settings"] == Settings()
    assert app.config["STABLE_MARGIN"] == DEFAULT_STABLE_MARGIN


def test_settings_loaded_from_env(monkeypatch):
    """Test that LINDCALC_* variables reach the app settings."""
    monkeypatch.setenv("LINDCALC_WINDOW", "2")
    monkeypatch.setenv("LINDCALC_LANG", "ja")

    settings = create_app().extensions["lindcalc.settings"]

    assert settings.window == 2
    assert settings.language == "ja"


def test_custom_config_overrides_env_vars(monkeypatch):
    """Test that custom config takes precedence over environment variables."""
    monkeypatch.setenv("LINDCALC_STABLE_MARGIN", "5")

    app = create_app({"STABLE_MARGIN": 3})

    assert app.extensions["lindcalc.settings"].stable_margin == 3


def test_invalid_env_value_raises_error(monkeypatch):
    """Test that an invalid LINDCALC_TPQ_BOUND raises ValueError."""
    monkeypatch.setenv("LINDCALC_TPQ_BOUND", "invalid")

    with pytest.raises(ValueError) as exc_info:
        create_app()

    assert "LINDCALC_TPQ_BOUND must be a valid integer" in str(exc_info.value)


def test_invalid_override_raises_error():
    """Test that overrides are validated like environment values."""
    with pytest.raises(ValueError, match="Unsupported language"):
        create_app({"LANGUAGE": "fr"})


def test_blueprints_are_registered():
    """Test that the main and api blueprints are registered."""
    app = create_app()

    assert "main" in app.blueprints
    assert "api" in app.blueprints
