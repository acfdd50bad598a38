"""Routes blueprint initialization module.

This module defines and exports the main Blueprint for the application.
"""

from flask import Blueprint, Response, jsonify, request

from lindcalc.translations.loader import TranslationLoader

main_bp = Blueprint("main", __name__)

ENDPOINTS = [
    "/api/norm",
    "/api/star",
    "/api/theta",
    "/api/dim",
    "/api/order",
    "/api/chain",
    "/api/theta-k",
    "/api/ext1",
    "/api/tpq",
    "/api/tensor",
    "/api/inj-profile",
    "/api/dlim-verdict",
    "/api/spinor-equiv",
]


@main_bp.route("/")
def index() -> Response:
    """Root endpoint listing the query endpoints.

    Returns:
        JSON response with the service description.
    """
    language = request.args.get("lang", "en")
    if language not in TranslationLoader.get_supported_languages():
        language = "en"
    return jsonify(
        {
            "name": TranslationLoader.get(language, "api.name", "lindcalc"),
            "description": TranslationLoader.get(language, "api.description"),
            "endpoints": ENDPOINTS,
        }
    )


@main_bp.route("/health")
def health() -> Response:
    """Health check endpoint.

    Returns:
        JSON response indicating the application is healthy.
    """
    return jsonify(
        {
            "status": "healthy",
        }
    )
