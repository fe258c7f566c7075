"""
The τ translation and evaluation of MV terms.

A formula φ is read as the MV equation τ(φ) = 1, where

    τ(xi)     = xi
    τ(~ψ)     = τ(ψ)∗
    τ(ψ -> ξ) = τ(ψ)∗ ⊕ τ(ξ)

is_tautology_on_chain decides that equation on a single finite chain by
scanning every assignment in canonical order (variables by index, values
ascending), so the reported counterexample is always the first one.
"""

import itertools
from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from mvring.algebra import FiniteMvAlgebra, MvAlgebra, Value, chain
from mvring.config import TAUTOLOGY_MAX_ASSIGNMENTS, check_cap

from .formula import Formula, Implies, LogicError, MvTerm, Not, Oplus, Star, Var, variables


def translate_tau(f: Formula) -> MvTerm:
    """Translate a formula into its MV term."""
    match f:
        case Var():
            return f
        case Not(a):
            return Star(translate_tau(a))
        case Implies(a, b):
            return Oplus(Star(translate_tau(a)), translate_tau(b))
    raise LogicError(f"not a formula: {f!r}")


def evaluate(t: MvTerm, assignment: Mapping[int, Value], algebra: MvAlgebra) -> Value:
    """
    Evaluate a term bottom-up in an algebra.

    Args:
        t: The term
        assignment: Variable index -> carrier value
        algebra: Where to evaluate

    Raises:
        LogicError: If a variable of t has no value
    """
    match t:
        case Var(index):
            if index not in assignment:
                raise LogicError(f"variable x{index} is not assigned")
            return assignment[index]
        case Star(a):
            return algebra.star(evaluate(a, assignment, algebra))
        case Oplus(a, b):
            return algebra.oplus(evaluate(a, assignment, algebra), evaluate(b, assignment, algebra))
    raise LogicError(f"not a term: {t!r}")


def compile_term(
    t: MvTerm, algebra: FiniteMvAlgebra, order: tuple[int, ...]
) -> Callable[[tuple[int, ...]], int]:
    """
    Turn a term into a function on element indices.

    The returned function takes a tuple of element indices, one per variable
    in `order`, and returns the index of the term's value. Used by the
    exhaustive scan, where the tree walk would dominate.
    """
    position = {v: i for i, v in enumerate(order)}
    plus, star = algebra.oplus_table, algebra.star_table

    def build(node: MvTerm) -> Callable[[tuple[int, ...]], int]:
        match node:
            case Var(index):
                p = position[index]
                return lambda env: env[p]
            case Star(a):
                fa = build(a)
                return lambda env: star[fa(env)]
            case Oplus(a, b):
                fa, fb = build(a), build(b)
                return lambda env: plus[fa(env)][fb(env)]
        raise LogicError(f"not a term: {node!r}")

    return build(t)


@dataclass
class TautologyResult:
    """
    Outcome of a chain-validity check.

    Attributes:
        formula: The checked formula
        k: Chain size parameter (the chain has k+1 elements)
        valid: True if τ(formula) evaluates to 1 under every assignment
        counterexample: First falsifying assignment (variable index -> value)
        value: τ(formula) under the counterexample
        checked: Number of assignments visited
    """

    formula: Formula
    k: int
    valid: bool
    counterexample: dict[int, Fraction] | None = None
    value: Fraction | None = None
    checked: int = 0


def is_tautology_on_chain(f: Formula, k: int) -> TautologyResult:
    """
    Decide whether τ(f) = 1 holds everywhere on the chain with k+1 elements.

    Raises:
        LogicError: If k < 1
        CapExceeded: If (k+1)^v exceeds TAUTOLOGY_MAX_ASSIGNMENTS
    """
    if k < 1:
        raise LogicError(f"chain size must be at least 1, got {k}")
    vs = variables(f)
    check_cap("TAUTOLOGY_MAX_ASSIGNMENTS", (k + 1) ** len(vs), TAUTOLOGY_MAX_ASSIGNMENTS)

    algebra = chain(k)
    one = algebra.index(algebra.one)
    run = compile_term(translate_tau(f), algebra, vs)

    checked = 0
    for env in itertools.product(range(k + 1), repeat=len(vs)):
        checked += 1
        result = run(env)
        if result != one:
            witness = {v: algebra.elements[i] for v, i in zip(vs, env, strict=True)}
            return TautologyResult(f, k, False, witness, algebra.elements[result], checked)
    return TautologyResult(f, k, True, checked=checked)
