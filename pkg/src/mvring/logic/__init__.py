"""
Łukasiewicz logic package.

Formulas (formula.py) are parsed from an ASCII syntax (parser.py), translated
into MV terms by τ and checked for validity on finite chains (semantics.py).
"""

from .formula import (
    AXIOM_SCHEMES,
    Formula,
    Implies,
    LogicError,
    MvTerm,
    Not,
    Oplus,
    Star,
    Var,
    format_formula,
    format_term,
    instantiate,
    size,
    variables,
)
from .parser import FormulaSyntaxError, parse_formula, tokenize
from .semantics import (
    TautologyResult,
    compile_term,
    evaluate,
    is_tautology_on_chain,
    translate_tau,
)

__all__ = [
    # Syntax
    "AXIOM_SCHEMES",
    "Formula",
    "Implies",
    "LogicError",
    "MvTerm",
    "Not",
    "Oplus",
    "Star",
    "Var",
    "format_formula",
    "format_term",
    "instantiate",
    "size",
    "variables",
    # Parsing
    "FormulaSyntaxError",
    "parse_formula",
    "tokenize",
    # Semantics
    "TautologyResult",
    "compile_term",
    "evaluate",
    "is_tautology_on_chain",
    "translate_tau",
]
