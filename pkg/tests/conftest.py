"""Pytest fixtures for lindcalc."""

import pytest
from click.testing import CliRunner

from lindcalc import create_app
from lindcalc.models.weights import Family, ThetaWeight

ALL_FAMILIES = [Family.SL, Family.O, Family.SP]

ENV_VARS = ("LINDCALC_STABLE_MARGIN", "LINDCALC_TPQ_BOUND", "LINDCALC_WINDOW", "LINDCALC_LANG")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep LINDCALC_* variables from the host out of every test."""
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def app():
    """Create and configure a test application instance.

    Yields:
        Flask application configured for testing.
    """
    app = create_app({"TESTING": True})
    yield app


@pytest.fixture
def client(app):
    """Flask test client."""
    return app.test_client()


@pytest.fixture
def runner():
    """Click runner for the CLI."""
    return CliRunner()


@pytest.fixture(params=ALL_FAMILIES, ids=lambda f: f.value)
def family(request):
    """Each of the three families in turn."""
    return request.param


@pytest.fixture
def natural_label():
    """The label of the natural module V for a family."""

    def build(family: Family) -> ThetaWeight:
        if family is Family.SL:
            return ThetaWeight.sl((1,))
        return ThetaWeight.single(family, (1,))

    return build
