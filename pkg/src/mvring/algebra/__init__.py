"""
MV-algebra package.

This package provides the carriers every other part of mvring builds on:

1. Algebras (algebra.py): finite chains, finite products and the rational
   unit interval, with ⊕, ∗ and all derived operations.
2. Laws (laws.py): exhaustive checking of the MV axioms and their derived
   properties, and the Boolean center.
3. Ideals (ideals.py): generated ideals, spectra, congruences and quotients.
4. Morphisms (morphisms.py): verified MV-homomorphisms and isomorphism search.
5. Serialization (serialization.py): spec strings and the text dump format.
"""

from .algebra import (
    FiniteMvAlgebra,
    MvAlgebra,
    MvAlgebraError,
    MvElement,
    UnitInterval,
    Value,
    chain,
    product,
)
from .ideals import (
    Ideal,
    MvSpectrum,
    QuotientAlgebra,
    all_ideals,
    congruences,
    ideal_generated,
    is_ideal,
    is_prime,
    quotient,
    spectra,
)
from .laws import LAWS, AxiomReport, Law, LawResult, boolean_center, check_axioms
from .morphisms import (
    MvHomomorphism,
    diagonal,
    find_isomorphism,
    identity,
    is_isomorphic,
    projection,
    quotient_map,
)
from .serialization import (
    dump_algebra,
    load_algebra,
    parse_algebra_spec,
    parse_element,
    parse_elements,
    parse_finite_spec,
)

__all__ = [
    # Carriers
    "FiniteMvAlgebra",
    "MvAlgebra",
    "MvAlgebraError",
    "MvElement",
    "UnitInterval",
    "Value",
    "chain",
    "product",
    # Laws
    "LAWS",
    "AxiomReport",
    "Law",
    "LawResult",
    "boolean_center",
    "check_axioms",
    # Ideals and quotients
    "Ideal",
    "MvSpectrum",
    "QuotientAlgebra",
    "all_ideals",
    "congruences",
    "ideal_generated",
    "is_ideal",
    "is_prime",
    "quotient",
    "spectra",
    # Morphisms
    "MvHomomorphism",
    "diagonal",
    "find_isomorphism",
    "identity",
    "is_isomorphic",
    "projection",
    "quotient_map",
    # Serialization
    "dump_algebra",
    "load_algebra",
    "parse_algebra_spec",
    "parse_element",
    "parse_elements",
    "parse_finite_spec",
]
