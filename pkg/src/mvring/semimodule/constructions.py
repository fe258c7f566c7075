"""
Semimodules built from an MV-algebra.

An MV-algebra A is a semimodule over either of its semiring reducts:

    reduct "join-odot":  <A, ∨, 0> over A∨⊙, acting by ⊙
    reduct "meet-oplus": <A, ∧, 1> over A∧⊕, acting by ⊕

A subreduct is any subset closed under the chosen join and action, and
the quotient A/I is an A∨⊙-semimodule through (a, x/I) ↦ (a ⊙ x)/I.
"""

from collections.abc import Iterable
from enum import StrEnum

from mvring.algebra import FiniteMvAlgebra, Ideal, Value, quotient
from mvring.formatting import format_value
from mvring.semiring import SemiringTable, join_odot_reduct, meet_oplus_reduct

from .matrix import SemimoduleError
from .module import FiniteSemimodule


class Reduct(StrEnum):
    """Which semiring reduct a module of an MV-algebra lives over."""

    JOIN_ODOT = "join-odot"
    MEET_OPLUS = "meet-oplus"


def reduct_semiring(algebra: FiniteMvAlgebra, reduct: Reduct) -> SemiringTable:
    if reduct is Reduct.JOIN_ODOT:
        return join_odot_reduct(algebra)
    return meet_oplus_reduct(algebra)


def reduct_semimodule(
    algebra: FiniteMvAlgebra, reduct: Reduct = Reduct.JOIN_ODOT
) -> FiniteSemimodule:
    """A as a semimodule over its own reduct."""
    s = reduct_semiring(algebra, reduct)
    if reduct is Reduct.JOIN_ODOT:
        return FiniteSemimodule(
            f"{algebra.name}[{reduct}]",
            s,
            algebra.elements,
            algebra.join_table,
            algebra.odot_table,
            algebra.zero_index,
        )
    return FiniteSemimodule(
        f"{algebra.name}[{reduct}]",
        s,
        algebra.elements,
        algebra.meet_table,
        algebra.oplus_table,
        algebra.index(algebra.one),
    )


def subreduct_semimodule(
    algebra: FiniteMvAlgebra,
    elements: Iterable[Value],
    reduct: Reduct = Reduct.JOIN_ODOT,
) -> FiniteSemimodule:
    """
    A subset of A as a semimodule over the chosen reduct.

    The subset must already contain the module zero and be closed under
    the join and the action.

    Raises:
        SemimoduleError: If the subset is not closed
    """
    full = reduct_semimodule(algebra, reduct)
    members = {algebra.index(x) for x in elements}
    if full.zero_index not in members:
        raise SemimoduleError(f"a subreduct must contain {format_value(full.zero)}")
    keep = sorted(members)
    shown = "{" + ", ".join(format_value(algebra.elements[i]) for i in keep) + "}"
    return full.restrict(keep, f"{shown}[{reduct}]")


def quotient_semimodule(
    algebra: FiniteMvAlgebra, ideal: Ideal | Iterable[Value]
) -> FiniteSemimodule:
    """
    A/I as an A∨⊙-semimodule with action (a, x/I) ↦ (a ⊙ x)/I.

    Elements are the class representatives of the quotient algebra.

    Raises:
        MvAlgebraError: If the subset is not an ideal
    """
    q = quotient(algebra, ideal)
    s = join_odot_reduct(algebra)
    qa = q.algebra
    return FiniteSemimodule.from_operations(
        f"{algebra.name}/{q.ideal.describe()}",
        s,
        qa.elements,
        qa.join,
        lambda a, x: q.class_map[algebra.odot(a, x)],
        qa.zero,
    )
