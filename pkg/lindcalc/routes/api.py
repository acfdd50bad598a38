"""JSON query API.

Each endpoint mirrors a CLI subcommand and returns the same payload as its
``--json`` output.

API Error Codes:
- MISSING_PARAMETER: a required query parameter is absent
- INVALID_WEIGHT: a weight, partition or number failed to parse
- Any other domain code from ``lindcalc.services.errors`` (RANK_TOO_SMALL, ...)
- INTERNAL_ERROR: Unexpected server error
"""

import logging

from flask import Blueprint, Response, current_app, jsonify, request
from flask.typing import ResponseReturnValue

from lindcalc.config import Settings
from lindcalc.models.descriptor import DescriptorKind, DirectSystemDescriptor, SpinorSequence
from lindcalc.models.weights import Family, ThetaWeight
from lindcalc.services import (
    char_oracle,
    dlim_desc,
    duals_inj,
    report,
    tensor_calc,
    theta_order,
    weights,
)
from lindcalc.services.errors import LindCalcError
from lindcalc.translations.loader import TranslationLoader

# Logger setup
logger = logging.getLogger(__name__)

api_bp = Blueprint("api", __name__, url_prefix="/api")


class MissingParameterError(LindCalcError):
    """A required query parameter is absent."""

    code = "MISSING_PARAMETER"


def _language() -> str:
    language = request.headers.get("X-Language") or request.args.get("lang")
    if language not in TranslationLoader.get_supported_languages():
        language = _settings().language
    return language


def _settings() -> Settings:
    return current_app.extensions["lindcalc.settings"]


def _create_error_response(
    error_message: str, error_code: str, status_code: int
) -> ResponseReturnValue:
    """
    Create a JSON error response.

    Args:
        error_message: Error message
        error_code: Error code
        status_code: HTTP status code

    Returns:
        Tuple of (Response, status_code)
    """
    response = jsonify(
        {
            "success": False,
            "error": error_message,
            "code": error_code,
            "title": TranslationLoader.error_title(_language(), error_code),
        }
    )
    response.headers["X-Error-Code"] = error_code
    return response, status_code


@api_bp.errorhandler(LindCalcError)
def _handle_domain_error(error: LindCalcError) -> ResponseReturnValue:
    logger.warning(f"Domain error on {request.path}: {error}")
    return _create_error_response(str(error), error.code, 400)


@api_bp.errorhandler(ValueError)
def _handle_value_error(error: ValueError) -> ResponseReturnValue:
    logger.warning(f"Invalid input on {request.path}: {error}")
    return _create_error_response(str(error), "INVALID_WEIGHT", 400)


@api_bp.errorhandler(Exception)
def _handle_unexpected(error: Exception) -> ResponseReturnValue:
    logger.exception(f"Unexpected error on {request.path}: {error}")
    message = TranslationLoader.get(_language(), "error.internal", "An unexpected error occurred.")
    return _create_error_response(message, "INTERNAL_ERROR", 500)


def _param(name: str) -> str:
    value = request.args.get(name)
    if value is None:
        raise MissingParameterError(f"query parameter '{name}' is required")
    return value


def _int_param(name: str, default: int | None = None) -> int:
    raw = request.args.get(name)
    if raw is None:
        if default is None:
            raise MissingParameterError(f"query parameter '{name}' is required")
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be a valid integer, got: '{raw}'") from None
    if value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got: {value}")
    return value


def _family() -> Family:
    return Family.parse(request.args.get("family", Family.SL.value))


def _weight(name: str) -> ThetaWeight:
    return ThetaWeight.parse(_family(), _param(name))


def _margin() -> int:
    return _int_param("stable_margin", _settings().stable_margin)


def _bound() -> int:
    return _int_param("bound", _settings().tpq_bound)


@api_bp.route("/norm")
def norm() -> Response:
    return jsonify(report.label_entry(_weight("weight")))


@api_bp.route("/star")
def star() -> Response:
    return jsonify(report.label_entry(weights.star(_weight("weight"))))


@api_bp.route("/theta")
def theta() -> Response:
    family = _family()
    return jsonify(report.labels_payload(family, weights.enumerate_theta(family, _int_param("k"))))


@api_bp.route("/dim")
def dim() -> Response:
    """
    Dimension of a truncation.

    Query:
        family, weight, rank (optional; default the stable rank)
    """
    lam = _weight("weight")
    default_rank = max(
        char_oracle.stable_rank_for(lam, margin=_margin()), char_oracle.minimal_rank(lam)
    )
    w = char_oracle.truncate(lam, _int_param("rank", default_rank))
    return jsonify({**report.ranked_entry(w), "dim": str(char_oracle.dim(w))})


@api_bp.route("/order")
def order() -> Response:
    mu, lam = _weight("mu"), _weight("lambda")
    verdict = theta_order.leq(mu, lam, _margin(), _int_param("window", _settings().window))
    return jsonify({"mu": mu.to_text(), "lambda": lam.to_text(), "leq": verdict})


@api_bp.route("/chain")
def chain() -> Response:
    lam, mu = _weight("lambda"), _weight("mu")
    return jsonify(report.chain_payload(lam, mu, theta_order.chain_length(lam, mu, _margin())))


@api_bp.route("/theta-k")
def theta_k() -> Response:
    labels = theta_order.theta_k(_weight("lambda"), _int_param("k"), _margin())
    return jsonify(report.labels_payload(_family(), labels))


@api_bp.route("/ext1")
def ext1() -> Response:
    value = theta_order.ext1_dim(_weight("mu"), _weight("lambda"), _margin())
    return jsonify(report.cardinal_payload(value))


@api_bp.route("/tpq")
def tpq() -> Response:
    """
    Composition factors and layers of T^{p,q}.

    Query:
        family, p, q, bound (optional)

    Response:
        {"family": "sl", "factors": [{"weight": "1|1", "mult": "1", "layer": "0"}, ...]}
    """
    family, p, q = _family(), _int_param("p"), _int_param("q")
    factors = tensor_calc.tpq_factors(family, p, q, _bound(), _margin())
    layers = {w: (p + q - weights.norm(w)) // 2 for w, _ in factors}
    return jsonify(report.factors_payload(family, factors, layers))


@api_bp.route("/tensor")
def tensor() -> Response:
    factors = tensor_calc.tensor_factors(_weight("lambda"), _weight("mu"), _bound(), _margin())
    return jsonify(report.factors_payload(_family(), factors))


@api_bp.route("/inj-profile")
def inj_profile() -> Response:
    return jsonify(report.profile_payload(duals_inj.inj_profile(_weight("lambda"), _margin())))


@api_bp.route("/dlim-verdict")
def dlim_verdict() -> Response:
    """
    Dual-integrability verdict for a built-in descriptor.

    Query:
        kind (sympower|spinor|stable), window (a..b, default 3..8),
        lambda (for stable), t (prefix:tail, for spinor)
    """
    kind = DescriptorKind.parse(_param("kind"))
    if kind is DescriptorKind.SYMPOWER:
        desc = DirectSystemDescriptor.sympower()
    elif kind is DescriptorKind.SPINOR:
        desc = DirectSystemDescriptor.spinors(SpinorSequence.parse(request.args.get("t", "-:1")))
    elif kind is DescriptorKind.STABLE:
        desc = DirectSystemDescriptor.stable(_weight("lambda"))
    else:
        raise ValueError("explicit descriptors are available from the Python API only")
    window = dlim_desc.parse_window(request.args.get("window", "3..8"))
    verdict = dlim_desc.dual_integrable_verdict(desc, window)
    return jsonify(report.verdict_payload(desc, window, verdict))


@api_bp.route("/spinor-equiv")
def spinor_equiv() -> Response:
    t, t_prime = SpinorSequence.parse(_param("t")), SpinorSequence.parse(_param("tprime"))
    return jsonify({"equivalent": dlim_desc.spinor_equiv(t, t_prime)})
