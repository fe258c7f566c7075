"""
Law checking for MV-algebras.

check_axioms runs every law exhaustively over the carrier of a finite
algebra (all pairs, all triples). On the unit interval it runs over the grid
{0, 1/q, ..., 1}, which is a sample and only ever proves failure.

The eleven axioms are MV1-MV9 plus the reformulated MV5 (x ⊕ 1 = 1) and MV6
((x ⊖ y) ⊕ y = (y ⊖ x) ⊕ x). The remaining entries are derived properties
every MV-algebra satisfies: the De Morgan quartet, the three equivalent
forms of x ≤ y, distributivity of ⊕, ⊙, ∧ over ∨ (and dually), and the
decomposition of an element along a Boolean element.

Every failure is reported with the first witness found in canonical order.
"""

import itertools
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from mvring.config import UNIT_INTERVAL_GRID

from .algebra import FiniteMvAlgebra, MvAlgebra, MvAlgebraError, UnitInterval, Value

Predicate = Callable[[MvAlgebra, tuple[Value, ...], Sequence[Value]], bool]


@dataclass(frozen=True)
class Law:
    """
    A universally quantified equation over an MV-algebra.

    Attributes:
        name: Short label (e.g. "MV6")
        statement: Human-readable statement
        arity: Number of quantified variables
        holds: Predicate taking the algebra, the variable values and the
            whole sample (for laws with an existential inside)
        axiom: True for MV1-MV9 and the two reformulations
    """

    name: str
    statement: str
    arity: int
    holds: Predicate
    axiom: bool = True


@dataclass
class LawResult:
    """
    Outcome of checking one law.

    Attributes:
        law: The law that was checked
        checked: Number of variable assignments visited
        witness: First falsifying assignment, or None if the law held
    """

    law: Law
    checked: int
    witness: tuple[Value, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None


@dataclass
class AxiomReport:
    """
    Result of check_axioms.

    Attributes:
        algebra: Name of the checked algebra
        sample_size: Number of carrier values the laws ranged over
        exhaustive: False when the sample is only a grid of an infinite carrier
        results: One entry per law, in LAWS order
    """

    algebra: str
    sample_size: int
    exhaustive: bool
    results: list[LawResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]


# ============================================================================
# Axioms
# ============================================================================


def _mv1(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y, z = v
    return a.oplus(x, a.oplus(y, z)) == a.oplus(a.oplus(x, y), z)


def _mv2(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.oplus(x, y) == a.oplus(y, x)


def _mv3(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    return a.oplus(v[0], a.zero) == v[0]


def _mv4(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    return a.star(a.star(v[0])) == v[0]


def _mv5(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    top = a.star(a.zero)
    return a.oplus(v[0], top) == top


def _mv6(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.oplus(a.star(a.oplus(a.star(x), y)), y) == a.oplus(a.star(a.oplus(a.star(y), x)), x)


def _mv7(a: MvAlgebra, _v: tuple, _sample: Sequence) -> bool:
    return a.star(a.one) == a.zero


def _mv8(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.oplus(x, y) == a.star(a.odot(a.star(x), a.star(y)))


def _mv9(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    return a.oplus(v[0], a.star(v[0])) == a.one


def _mv5_reformulated(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    return a.oplus(v[0], a.one) == a.one


def _mv6_reformulated(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.oplus(a.ominus(x, y), y) == a.oplus(a.ominus(y, x), x)


# ============================================================================
# Derived properties
# ============================================================================


def _de_morgan_join(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.star(a.join(x, y)) == a.meet(a.star(x), a.star(y))


def _de_morgan_meet(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.star(a.meet(x, y)) == a.join(a.star(x), a.star(y))


def _de_morgan_oplus(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.star(a.oplus(x, y)) == a.odot(a.star(x), a.star(y))


def _de_morgan_odot(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, y = v
    return a.star(a.odot(x, y)) == a.oplus(a.star(x), a.star(y))


def _order_equivalence(a: MvAlgebra, v: tuple, sample: Sequence) -> bool:
    x, y = v
    first = a.oplus(a.star(x), y) == a.one
    second = a.odot(x, a.star(y)) == a.zero
    third = any(a.oplus(x, z) == y for z in sample)
    return first == second == third


def _distributes_over_join(op: str) -> Predicate:
    def holds(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
        f = getattr(a, op)
        x, y, z = v
        return f(x, a.join(y, z)) == a.join(f(x, y), f(x, z))

    return holds


def _distributes_over_meet(op: str) -> Predicate:
    def holds(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
        f = getattr(a, op)
        x, y, z = v
        return f(x, a.meet(y, z)) == a.meet(f(x, y), f(x, z))

    return holds


def _boolean_equivalence(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x = v[0]
    return (a.oplus(x, x) == x) == (a.odot(x, x) == x)


def _boolean_decomposition(a: MvAlgebra, v: tuple, _sample: Sequence) -> bool:
    x, u = v
    if not a.is_boolean(u):
        return True
    by_meet = a.meet(a.oplus(x, u), a.oplus(x, a.star(u)))
    by_join = a.join(a.odot(x, u), a.odot(x, a.star(u)))
    return x == by_meet == by_join


LAWS: tuple[Law, ...] = (
    Law("MV1", "x ⊕ (y ⊕ z) = (x ⊕ y) ⊕ z", 3, _mv1),
    Law("MV2", "x ⊕ y = y ⊕ x", 2, _mv2),
    Law("MV3", "x ⊕ 0 = x", 1, _mv3),
    Law("MV4", "(x∗)∗ = x", 1, _mv4),
    Law("MV5", "x ⊕ 0∗ = 0∗", 1, _mv5),
    Law("MV6", "(x∗ ⊕ y)∗ ⊕ y = (y∗ ⊕ x)∗ ⊕ x", 2, _mv6),
    Law("MV7", "1∗ = 0", 0, _mv7),
    Law("MV8", "x ⊕ y = (x∗ ⊙ y∗)∗", 2, _mv8),
    Law("MV9", "x ⊕ x∗ = 1", 1, _mv9),
    Law("MV5'", "x ⊕ 1 = 1", 1, _mv5_reformulated),
    Law("MV6'", "(x ⊖ y) ⊕ y = (y ⊖ x) ⊕ x", 2, _mv6_reformulated),
    Law("DM∨", "(x ∨ y)∗ = x∗ ∧ y∗", 2, _de_morgan_join, axiom=False),
    Law("DM∧", "(x ∧ y)∗ = x∗ ∨ y∗", 2, _de_morgan_meet, axiom=False),
    Law("DM⊕", "(x ⊕ y)∗ = x∗ ⊙ y∗", 2, _de_morgan_oplus, axiom=False),
    Law("DM⊙", "(x ⊙ y)∗ = x∗ ⊕ y∗", 2, _de_morgan_odot, axiom=False),
    Law("ORD", "x∗ ⊕ y = 1 iff x ⊙ y∗ = 0 iff x ⊕ z = y for some z", 2, _order_equivalence,
        axiom=False),
    Law("D⊕∨", "x ⊕ (y ∨ z) = (x ⊕ y) ∨ (x ⊕ z)", 3, _distributes_over_join("oplus"),
        axiom=False),
    Law("D⊙∨", "x ⊙ (y ∨ z) = (x ⊙ y) ∨ (x ⊙ z)", 3, _distributes_over_join("odot"),
        axiom=False),
    Law("D∧∨", "x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)", 3, _distributes_over_join("meet"),
        axiom=False),
    Law("D⊕∧", "x ⊕ (y ∧ z) = (x ⊕ y) ∧ (x ⊕ z)", 3, _distributes_over_meet("oplus"),
        axiom=False),
    Law("D⊙∧", "x ⊙ (y ∧ z) = (x ⊙ y) ∧ (x ⊙ z)", 3, _distributes_over_meet("odot"),
        axiom=False),
    Law("D∨∧", "x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)", 3, _distributes_over_meet("join"),
        axiom=False),
    Law("B⊕⊙", "x ⊕ x = x iff x ⊙ x = x", 1, _boolean_equivalence, axiom=False),
    Law("BDEC", "x = (x ⊕ u) ∧ (x ⊕ u∗) = (x ⊙ u) ∨ (x ⊙ u∗) for u in B(A)", 2,
        _boolean_decomposition, axiom=False),
)


def check_law(
    algebra: MvAlgebra, law: Law, sample: Sequence[Value]
) -> LawResult:
    """Check a single law over every assignment drawn from sample."""
    checked = 0
    for values in itertools.product(sample, repeat=law.arity):
        checked += 1
        if not law.holds(algebra, values, sample):
            return LawResult(law, checked, values)
    return LawResult(law, checked)


def check_axioms(
    algebra: MvAlgebra,
    sample: Sequence[Value] | None = None,
    grid: int = UNIT_INTERVAL_GRID,
    include_properties: bool = True,
) -> AxiomReport:
    """
    Check the MV axioms (and optionally the derived properties).

    Args:
        algebra: The algebra to check
        sample: Values to quantify over; defaults to the whole carrier for
            finite algebras and to the q-grid for the unit interval
        grid: Resolution q of the unit-interval grid
        include_properties: Also check the derived properties

    Returns:
        An AxiomReport with one LawResult per law
    """
    exhaustive = sample is None and algebra.is_finite
    if sample is None:
        if isinstance(algebra, FiniteMvAlgebra):
            sample = algebra.elements
        elif isinstance(algebra, UnitInterval):
            sample = algebra.grid(grid)
        else:
            raise MvAlgebraError(f"no default sample for {algebra!r}")

    report = AxiomReport(algebra.name, len(sample), exhaustive)
    for law in LAWS:
        if law.axiom or include_properties:
            report.results.append(check_law(algebra, law, sample))
    return report


def boolean_center(algebra: MvAlgebra) -> tuple[Value, ...]:
    """
    The Boolean center B(A) = {a | a ⊕ a = a}, in canonical order.

    Raises:
        MvAlgebraError: If the algebra is infinite
    """
    if not isinstance(algebra, FiniteMvAlgebra):
        raise MvAlgebraError(f"boolean_center needs a finite algebra, got {algebra.name}")
    return tuple(x for x in algebra.elements if algebra.is_boolean(x))
