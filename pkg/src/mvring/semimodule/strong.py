"""
Strong semimodules.

A semimodule M over A∨⊙ (or A∧⊕) is strong when the action cannot tell
two scalars apart unless it can also tell their negations apart:

    a·x = b·x for all x   implies   a∗·x = b∗·x for all x

Equivalently, the kernel of a ↦ λ_a (λ_a(x) = a·x) is an MV-congruence,
so the image of A in End(M) is itself an MV-semiring. For tiny modules
strong_via_endomorphisms computes that image and confirms the two views
agree.
"""

import itertools
from dataclasses import dataclass

from mvring.algebra import FiniteMvAlgebra, Value
from mvring.config import STRONG_CROSSCHECK_MAX_SIZE, check_cap
from mvring.semiring import Recognition, SemiringTable, recognize_mv_semiring

from .matrix import SemimoduleError
from .module import FiniteSemimodule


@dataclass
class StrongnessResult:
    """
    Outcome of the strongness test.

    Attributes:
        module: The module tested
        witness: (a, b, x) with a·y = b·y for every y but a∗·x != b∗·x,
            or None when the module is strong
    """

    module: FiniteSemimodule
    witness: tuple[Value, Value, Value] | None

    @property
    def strong(self) -> bool:
        return self.witness is None


def _scalar_star(algebra: FiniteMvAlgebra, module: FiniteSemimodule) -> list[int]:
    if module.semiring.elements != algebra.elements:
        raise SemimoduleError(f"{module.name} is not a module over a reduct of {algebra.name}")
    return list(algebra.star_table)


def is_strong(algebra: FiniteMvAlgebra, module: FiniteSemimodule) -> StrongnessResult:
    """
    Test the strongness condition over all scalar pairs.

    Pairs are visited with a in canonical order and b ranging over the
    scalars before a, so the reported witness has the smallest such a.

    Raises:
        SemimoduleError: If module's semiring is not a reduct of algebra
    """
    star = _scalar_star(algebra, module)
    act = module.action_table
    e = algebra.elements
    for a in range(len(e)):
        for b in range(a):
            if act[a] != act[b]:
                continue
            row_a, row_b = act[star[a]], act[star[b]]
            for x in range(len(module)):
                if row_a[x] != row_b[x]:
                    return StrongnessResult(module, (e[a], e[b], module.elements[x]))
    return StrongnessResult(module, None)


@dataclass
class EndomorphismCheck:
    """
    Strongness decided through the action image in End(M).

    Attributes:
        module: The module tested
        endomorphisms: |End(M)|, the join- and zero-preserving self-maps
        image: The distinct maps λ_a, in scalar order
        negation_well_defined: Whether λ_a ↦ λ_{a∗} is a function on the image
        recognition: MV-semiring recognition of the image, when it was built
        by_condition: The answer of is_strong
    """

    module: FiniteSemimodule
    endomorphisms: int
    image: list[tuple[int, ...]]
    negation_well_defined: bool
    recognition: Recognition | None
    by_condition: StrongnessResult

    @property
    def strong(self) -> bool:
        return (
            self.negation_well_defined
            and self.recognition is not None
            and self.recognition.recognized
        )

    @property
    def agrees(self) -> bool:
        return self.strong == self.by_condition.strong


def join_endomorphisms(module: FiniteSemimodule) -> list[tuple[int, ...]]:
    """Every map M -> M preserving ∨ and 0, as index tuples."""
    n, j, z = len(module), module.join_table, module.zero_index
    found = []
    for f in itertools.product(range(n), repeat=n):
        if f[z] != z:
            continue
        if all(f[j[x][y]] == j[f[x]][f[y]] for x in range(n) for y in range(x + 1, n)):
            found.append(f)
    return found


def strong_via_endomorphisms(
    algebra: FiniteMvAlgebra, module: FiniteSemimodule
) -> EndomorphismCheck:
    """
    Decide strongness from the image of A in End(M) and compare with is_strong.

    Raises:
        CapExceeded: If |A| or |M| exceeds STRONG_CROSSCHECK_MAX_SIZE
        SemimoduleError: If module's semiring is not a reduct of algebra
    """
    check_cap("STRONG_CROSSCHECK_MAX_SIZE", len(algebra), STRONG_CROSSCHECK_MAX_SIZE)
    check_cap("STRONG_CROSSCHECK_MAX_SIZE", len(module), STRONG_CROSSCHECK_MAX_SIZE)
    star = _scalar_star(algebra, module)
    ends = join_endomorphisms(module)
    act = module.action_table
    if any(row not in ends for row in act):
        raise SemimoduleError(f"{module.name}: some scalar does not act by an endomorphism")

    image: list[tuple[int, ...]] = []
    negation: dict[tuple[int, ...], tuple[int, ...]] = {}
    well_defined = True
    for a, row in enumerate(act):
        if row not in image:
            image.append(row)
        neg = act[star[a]]
        if negation.setdefault(row, neg) != neg:
            well_defined = False

    recognition = None
    if well_defined:
        j = module.join_table
        n = len(module)
        e = SemiringTable.from_operations(
            f"End({module.name})",
            image,
            lambda f, g: tuple(j[f[x]][g[x]] for x in range(n)),
            lambda f, g: tuple(f[g[x]] for x in range(n)),
            act[module.semiring.zero_index],
            act[module.semiring.one_index],
        )
        recognition = recognize_mv_semiring(e)
    return EndomorphismCheck(
        module, len(ends), image, well_defined, recognition, is_strong(algebra, module)
    )
