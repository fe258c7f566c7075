"""
Sheaf package.

1. Localization (localization.py): fractions a/b over a multiplicatively
   closed set and the local semirings S_P.
2. Sections (sections.py): stalks over the prime spectrum, canonical
   sections and the comparison map φ : S -> Ŝ.
"""

from .localization import (
    EquivalenceReport,
    LocalFraction,
    Localization,
    SheafError,
    equivalence_report,
    localize,
    localize_at,
)
from .sections import (
    GlobalSections,
    MvSectionsReport,
    SheafSpace,
    StalkEntry,
    global_sections,
    mv_global_sections,
    sheaf_space,
    stalk_is_mv,
    stalk_report,
)

__all__ = [
    # Localization
    "EquivalenceReport",
    "LocalFraction",
    "Localization",
    "SheafError",
    "equivalence_report",
    "localize",
    "localize_at",
    # Sections
    "GlobalSections",
    "MvSectionsReport",
    "SheafSpace",
    "StalkEntry",
    "global_sections",
    "mv_global_sections",
    "sheaf_space",
    "stalk_is_mv",
    "stalk_report",
]
