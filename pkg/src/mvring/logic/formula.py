"""
Syntax trees for Łukasiewicz formulas and MV terms.

Formulas are built from variables x1, x2, ... with negation and
implication. MV terms are built from the same variables with ∗ and ⊕; the
τ translation (see semantics.py) maps the former to the latter.

Both trees are immutable and hashable, so they can be compared structurally
and used as dictionary keys.
"""

from dataclasses import dataclass


class LogicError(Exception):
    """Raised for malformed formulas, terms or assignments."""

    pass


@dataclass(frozen=True)
class Var:
    """
    A propositional variable x<index>. Shared by formulas and terms.

    Attributes:
        index: Positive variable index
    """

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise LogicError(f"variable indices start at 1, got {self.index}")


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Star:
    operand: "MvTerm"


@dataclass(frozen=True)
class Oplus:
    left: "MvTerm"
    right: "MvTerm"


Formula = Var | Not | Implies
MvTerm = Var | Star | Oplus


def variables(node: Formula | MvTerm) -> tuple[int, ...]:
    """Sorted indices of the variables occurring in a formula or term."""
    found: set[int] = set()
    stack = [node]
    while stack:
        n = stack.pop()
        match n:
            case Var(index):
                found.add(index)
            case Not(a) | Star(a):
                stack.append(a)
            case Implies(a, b) | Oplus(a, b):
                stack.extend((a, b))
    return tuple(sorted(found))


def size(node: Formula | MvTerm) -> int:
    """Number of nodes."""
    match node:
        case Var():
            return 1
        case Not(a) | Star(a):
            return 1 + size(a)
        case Implies(a, b) | Oplus(a, b):
            return 1 + size(a) + size(b)
    raise LogicError(f"not a formula or term: {node!r}")


def format_formula(f: Formula) -> str:
    """
    Print a formula in the ASCII surface syntax with minimal parentheses.

    `->` is right-associative and `~` binds tighter, so only an implication
    on the left of `->` or under `~` needs parentheses.
    """
    match f:
        case Var(index):
            return f"x{index}"
        case Not(a):
            inner = format_formula(a)
            return f"~({inner})" if isinstance(a, Implies) else f"~{inner}"
        case Implies(a, b):
            left = format_formula(a)
            if isinstance(a, Implies):
                left = f"({left})"
            return f"{left} -> {format_formula(b)}"
    raise LogicError(f"not a formula: {f!r}")


def format_term(t: MvTerm) -> str:
    """Print an MV term, parenthesizing every compound operand."""
    match t:
        case Var(index):
            return f"x{index}"
        case Star(a):
            inner = format_term(a)
            return f"({inner})*" if isinstance(a, Oplus) else f"{inner}*"
        case Oplus(a, b):
            left = format_term(a)
            right = format_term(b)
            if isinstance(a, Oplus):
                left = f"({left})"
            if isinstance(b, Oplus):
                right = f"({right})"
            return f"{left} ⊕ {right}"
    raise LogicError(f"not a term: {t!r}")


# ============================================================================
# Axiom schemes
# ============================================================================


def axiom_l1(phi: Formula, psi: Formula, _chi: Formula) -> Formula:
    """φ -> (ψ -> φ)"""
    return Implies(phi, Implies(psi, phi))


def axiom_l2(phi: Formula, psi: Formula, chi: Formula) -> Formula:
    """(φ -> ψ) -> ((ψ -> χ) -> (φ -> χ))"""
    return Implies(Implies(phi, psi), Implies(Implies(psi, chi), Implies(phi, chi)))


def axiom_l3(phi: Formula, psi: Formula, _chi: Formula) -> Formula:
    """((φ -> ψ) -> ψ) -> ((ψ -> φ) -> φ)"""
    return Implies(Implies(Implies(phi, psi), psi), Implies(Implies(psi, phi), phi))


def axiom_l4(phi: Formula, psi: Formula, _chi: Formula) -> Formula:
    """(~φ -> ~ψ) -> (ψ -> φ)"""
    return Implies(Implies(Not(phi), Not(psi)), Implies(psi, phi))


AXIOM_SCHEMES = {
    "Ł1": axiom_l1,
    "Ł2": axiom_l2,
    "Ł3": axiom_l3,
    "Ł4": axiom_l4,
}


def instantiate(
    scheme: str, phi: Formula, psi: Formula | None = None, chi: Formula | None = None
) -> Formula:
    """
    Instantiate an axiom scheme by name.

    psi and chi default to the variables x2 and x3.

    Raises:
        LogicError: If the scheme name is unknown
    """
    try:
        build = AXIOM_SCHEMES[scheme]
    except KeyError:
        raise LogicError(f"unknown axiom scheme {scheme!r}") from None
    return build(phi, psi or Var(2), chi or Var(3))
