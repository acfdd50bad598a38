"""Runtime settings read from the environment.

Values come from ``LINDCALC_*`` environment variables; entry points call
``load_dotenv()`` first so a local ``.env`` file can provide them.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

DEFAULT_STABLE_MARGIN = 2
DEFAULT_TPQ_BOUND = 6
DEFAULT_WINDOW = 0
DEFAULT_LANGUAGE = "en"
SUPPORTED_LANGUAGES = ("en", "ja")


def _read_nonnegative_int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be a valid integer, got: '{raw}'") from None
    if value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got: {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Computation knobs shared by the CLI and the HTTP API.

    Attributes:
        stable_margin: additive constant in the stable rank N_stable
        tpq_bound: largest admissible p+q (and norm sum for tensor products)
        window: extra probe ranks used by the order test
        language: diagnostics language ('en' or 'ja')
    """

    stable_margin: int = DEFAULT_STABLE_MARGIN
    tpq_bound: int = DEFAULT_TPQ_BOUND
    window: int = DEFAULT_WINDOW
    language: str = DEFAULT_LANGUAGE

    def __post_init__(self) -> None:
        for name in ("stable_margin", "tpq_bound", "window"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
            if value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")
        if self.language not in SUPPORTED_LANGUAGES:
            raise ValueError(
                f"Unsupported language: {self.language}. "
                f"Supported languages: {', '.join(SUPPORTED_LANGUAGES)}"
            )

    @classmethod
    def from_env(cls, env: Mapping[str, str] | None = None) -> Settings:
        """Build settings from ``LINDCALC_*`` variables (``os.environ`` by default).

        Raises:
            ValueError: a variable holds an invalid value
        """
        source = os.environ if env is None else env
        return cls(
            stable_margin=_read_nonnegative_int(
                source, "LINDCALC_STABLE_MARGIN", DEFAULT_STABLE_MARGIN
            ),
            tpq_bound=_read_nonnegative_int(source, "LINDCALC_TPQ_BOUND", DEFAULT_TPQ_BOUND),
            window=_read_nonnegative_int(source, "LINDCALC_WINDOW", DEFAULT_WINDOW),
            language=source.get("LINDCALC_LANG", DEFAULT_LANGUAGE).strip().lower()
            or DEFAULT_LANGUAGE,
        )

    def override(self, **changes: int | str | None) -> Settings:
        """Return a copy with the non-``None`` entries of ``changes`` applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
