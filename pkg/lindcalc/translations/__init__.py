"""Message catalogs for lindcalc diagnostics."""

from .loader import TranslationLoader

__all__ = ["TranslationLoader"]
