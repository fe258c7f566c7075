"""
Semiring package.

1. Tables (table.py): finite additively idempotent semirings and verified
   semiring maps.
2. Reducts (reducts.py): A∨⊙ and A∧⊕ of an MV-algebra, MV-semiring
   recognition and reconstruction.
3. Spectrum (spectrum.py): semiring ideals, primes and the Zariski basis.
4. Semifield (semifield.py): the min-plus semifield on ℤ ∪ {⊤} and its Γ
   truncation.
"""

from .reducts import (
    Recognition,
    RecognitionRefused,
    Reducts,
    join_odot_reduct,
    meet_oplus_reduct,
    recognize_mv_semiring,
    reconstruct_mv,
    reducts,
)
from .semifield import (
    TOP,
    FieldValue,
    GammaReport,
    GammaTruncation,
    LawCheck,
    MinPlusSemifield,
    check_gamma,
    check_semifield_laws,
    gamma_truncate,
    lgroup_semifield_bridge,
    parse_field_value,
)
from .spectrum import (
    RSpectrum,
    SemiringIdeal,
    ideal_closure,
    is_prime_ideal,
    maximal_ideals,
    r_spec,
    semiring_ideals,
)
from .table import (
    SemiringError,
    SemiringMap,
    SemiringTable,
    boolean_semiring,
    identity_map,
    product_semiring,
)

__all__ = [
    # Tables
    "SemiringError",
    "SemiringMap",
    "SemiringTable",
    "boolean_semiring",
    "identity_map",
    "product_semiring",
    # Reducts and recognition
    "Recognition",
    "RecognitionRefused",
    "Reducts",
    "join_odot_reduct",
    "meet_oplus_reduct",
    "recognize_mv_semiring",
    "reconstruct_mv",
    "reducts",
    # Spectrum
    "RSpectrum",
    "SemiringIdeal",
    "ideal_closure",
    "is_prime_ideal",
    "maximal_ideals",
    "r_spec",
    "semiring_ideals",
    # Semifield
    "TOP",
    "FieldValue",
    "GammaReport",
    "GammaTruncation",
    "LawCheck",
    "MinPlusSemifield",
    "check_gamma",
    "check_semifield_laws",
    "gamma_truncate",
    "lgroup_semifield_bridge",
    "parse_field_value",
]
