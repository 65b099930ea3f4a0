"""Optional projections and Azéma supermartingales."""

from .azema import AzemaBundle, azema_bundle
from .hloc import hloc_check
from .optional import (
    dual_optional_projection,
    optional_projection,
    projection_martingale,
)

__all__ = (
    "AzemaBundle",
    "azema_bundle",
    "hloc_check",
    "dual_optional_projection",
    "optional_projection",
    "projection_martingale",
)
