"""
K-theory package.

1. Projectives (projectives.py): idempotent matrices, direct sums and the
   catalog of projective classes up to isomorphism.
2. Grothendieck (grothendieck.py): K0 as formal differences, its
   presentation and the maps induced by MV-homomorphisms.
"""

from .grothendieck import (
    K0Element,
    K0Group,
    K0Map,
    K0Presentation,
    catalog_for,
    compose_class_maps,
    csv_report,
    describe_group,
    k0_map,
    smith_diagonal,
)
from .projectives import (
    KTheoryError,
    MutualExpressibility,
    ProjClass,
    ProjectiveCatalog,
    ProjectivityAgreement,
    direct_sum,
    enumerate_projectives,
    mutual_expressibility,
    pad,
    padding_invariant,
    projective_presentation,
    projectivity_agreement,
    submodules_of_free,
)

__all__ = [
    # Projectives
    "KTheoryError",
    "MutualExpressibility",
    "ProjClass",
    "ProjectiveCatalog",
    "ProjectivityAgreement",
    "direct_sum",
    "enumerate_projectives",
    "mutual_expressibility",
    "pad",
    "padding_invariant",
    "projective_presentation",
    "projectivity_agreement",
    "submodules_of_free",
    # K0
    "K0Element",
    "K0Group",
    "K0Map",
    "K0Presentation",
    "catalog_for",
    "compose_class_maps",
    "csv_report",
    "describe_group",
    "k0_map",
    "smith_diagonal",
]
