"""Flask application factory module.

This module provides the application factory pattern for creating
and configuring the JSON query API.
"""

import logging

from flask import Flask

from lindcalc.config import Settings

logger = logging.getLogger(__name__)


def create_app(config: dict | None = None) -> Flask:
    """Create and configure the Flask application.

    Args:
        config: Optional configuration dictionary to override defaults.
            ``STABLE_MARGIN``, ``TPQ_BOUND``, ``WINDOW`` and ``LANGUAGE``
            override the ``LINDCALC_*`` environment settings.

    Returns:
        Configured Flask application instance.

    Raises:
        ValueError: an environment variable or override holds an invalid value
    """
    app = Flask(__name__)

    settings = Settings.from_env()
    app.config.update(
        STABLE_MARGIN=settings.stable_margin,
        TPQ_BOUND=settings.tpq_bound,
        WINDOW=settings.window,
        LANGUAGE=settings.language,
    )

    # Override with custom config if provided
    if config:
        app.config.update(config)

    # Validate the merged values once
    app.extensions["lindcalc.settings"] = Settings(
        stable_margin=app.config["STABLE_MARGIN"],
        tpq_bound=app.config["TPQ_BOUND"],
        window=app.config["WINDOW"],
        language=app.config["LANGUAGE"],
    )
    app.json.sort_keys = True  # type: ignore[attr-defined]
    app.json.ensure_ascii = False  # type: ignore[attr-defined]

    # Register blueprints
    from lindcalc.routes import main_bp
    from lindcalc.routes.api import api_bp

    app.register_blueprint(main_bp)
    app.register_blueprint(api_bp)

    logger.debug("created app with %s", app.extensions["lindcalc.settings"])
    return app
