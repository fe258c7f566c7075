"""
The sheaf of a finite semiring over its prime spectrum.

Over every prime P of S sits the stalk S_P. A section picks one fraction in
each stalk; the canonical section of s ∈ S is

    ŝ : P ↦ [s/1]_P

The canonical sections form a semiring Ŝ under the pointwise operations,
and s ↦ ŝ is a semiring homomorphism φ : S -> Ŝ. For finite S every
section is tabulated, so the base space needs no topology beyond the
Zariski basis already computed by r_spec.
"""

from collections.abc import Callable
from dataclasses import dataclass

from mvring.algebra import FiniteMvAlgebra, Value
from mvring.config import CapExceeded
from mvring.semiring import (
    SemiringError,
    SemiringIdeal,
    SemiringMap,
    SemiringTable,
    join_odot_reduct,
    r_spec,
    recognize_mv_semiring,
    reconstruct_mv,
)

from .localization import LocalFraction, Localization, SheafError, localize

Section = tuple[LocalFraction, ...]


@dataclass
class SheafSpace:
    """
    The étale space of S: stalks indexed by the primes of S.

    Attributes:
        semiring: S
        base: Primes of S in spectrum order
        stalks: The localization at each prime, aligned with base
    """

    semiring: SemiringTable
    base: list[SemiringIdeal]
    stalks: list[Localization]

    def germs(self) -> list[tuple[int, LocalFraction]]:
        """Every (prime index, fraction class) pair of the total space."""
        return [(i, f) for i, loc in enumerate(self.stalks) for f in loc.table.elements]

    def project(self, germ: tuple[int, LocalFraction]) -> SemiringIdeal:
        """π: a germ lies over its prime."""
        return self.base[germ[0]]

    def section(self, s: Value) -> Section:
        """The canonical section ŝ."""
        return tuple(loc.fraction(s) for loc in self.stalks)


def sheaf_space(s: SemiringTable) -> SheafSpace:
    primes = r_spec(s).primes
    return SheafSpace(s, primes, [localize(s, p) for p in primes])


def stalk_is_mv(stalk: Localization) -> bool:
    """
    Whether a stalk is an MV-semiring.

    Raises:
        CapExceeded: If the stalk is larger than RECOGNITION_MAX_SIZE
    """
    return recognize_mv_semiring(stalk.table).recognized


@dataclass
class StalkEntry:
    """
    One row of a stalk report.

    Attributes:
        prime: P
        size: |S_P|
        local: Whether S_P has a unique maximal ideal
        mv: Recognition verdict, or None when the stalk exceeds the cap
        well_defined_problem: Representative dependence of the fraction
            operations, if any
    """

    prime: SemiringIdeal
    size: int
    local: bool
    mv: bool | None
    well_defined_problem: str | None = None


def stalk_report(s: SemiringTable) -> list[StalkEntry]:
    """Size, locality and MV verdict of every stalk of S."""
    entries = []
    space = sheaf_space(s)
    for prime, stalk in zip(space.base, space.stalks, strict=True):
        try:
            mv: bool | None = stalk_is_mv(stalk)
        except CapExceeded:
            mv = None
        entries.append(
            StalkEntry(prime, len(stalk.table), stalk.is_local, mv, stalk.well_defined_problem)
        )
    return entries


# ============================================================================
# Global sections
# ============================================================================


@dataclass
class GlobalSections:
    """
    Ŝ together with the comparison map φ : S -> Ŝ.

    Attributes:
        space: The sheaf the sections live in
        table: Ŝ; elements are sections in order of first appearance
        phi: s -> ŝ for every s ∈ S
        hom_problem: First failure of φ as a semiring homomorphism, or None
        closed_problem: Why the pointwise operations leave Ŝ, or None
    """

    space: SheafSpace
    table: SemiringTable | None
    phi: dict[Value, Section]
    hom_problem: str | None
    closed_problem: str | None = None

    @property
    def injective(self) -> bool:
        return len(set(self.phi.values())) == len(self.phi)

    @property
    def surjective(self) -> bool:
        return self.table is not None and set(self.phi.values()) == set(self.table.elements)

    @property
    def isomorphism(self) -> bool:
        return self.hom_problem is None and self.injective and self.surjective

    def inverse(self) -> dict[Section, Value]:
        """
        φ⁻¹ on Ŝ.

        Raises:
            SheafError: If φ is not injective
        """
        if not self.injective:
            raise SheafError("φ is not injective; it has no inverse")
        return {v: k for k, v in self.phi.items()}


def _pointwise(
    space: SheafSpace, pick: Callable[[SemiringTable], Callable[[Value, Value], Value]]
) -> Callable[[Section, Section], Section]:
    def op(x: Section, y: Section) -> Section:
        return tuple(
            pick(loc.table)(a, b) for loc, a, b in zip(space.stalks, x, y, strict=True)
        )

    return op


def global_sections(s: SemiringTable) -> GlobalSections:
    """
    Build Ŝ from the canonical sections and check φ.

    Without primes every section is the empty tuple, so Ŝ has one element.
    """
    space = sheaf_space(s)
    phi = {x: space.section(x) for x in s.elements}
    carrier = list(dict.fromkeys(phi.values()))
    join = _pointwise(space, lambda t: t.join)
    mul = _pointwise(space, lambda t: t.mul)

    try:
        table = SemiringTable.from_operations(
            f"sections({s.name})", carrier, join, mul, phi[s.zero], phi[s.one]
        )
    except SemiringError as e:
        return GlobalSections(space, None, phi, None, str(e))

    problem = SemiringMap(s, table, tuple(phi.items())).violation()
    return GlobalSections(space, table, phi, problem)


# ============================================================================
# MV structure on the sections of A∨⊙
# ============================================================================


@dataclass
class MvSectionsReport:
    """
    Transport of the MV structure of A along φ.

    Attributes:
        algebra: A
        sections: Global sections of A∨⊙
        transported: The MV-algebra on Ŝ, or None when φ is not an isomorphism
        mismatch: First (a, b) with φ(a ⊕ b) != φ(a) ⊕̂ φ(b) after
            rebuilding ⊕̂ from ∗̂ and the pointwise product, or None
        recognized: Recognition verdict on Ŝ, or None when Ŝ exceeds the cap
        star_agrees: Whether the negation recognized on Ŝ equals φ∘∗∘φ⁻¹,
            or None when recognition did not produce one
    """

    algebra: FiniteMvAlgebra
    sections: GlobalSections
    transported: FiniteMvAlgebra | None
    mismatch: tuple[Value, Value] | None
    recognized: bool | None
    star_agrees: bool | None = None

    @property
    def holds(self) -> bool:
        return (
            self.transported is not None
            and self.mismatch is None
            and self.recognized is not False
            and self.star_agrees is not False
        )


def mv_global_sections(algebra: FiniteMvAlgebra) -> MvSectionsReport:
    """
    Rebuild A from the global sections of its ∨⊙ reduct.

    The negation ∗̂ is recognized from the semiring tables of Ŝ alone when
    Ŝ is within RECOGNITION_MAX_SIZE, and compared with φ∘∗∘φ⁻¹. Larger Ŝ
    fall back to φ∘∗∘φ⁻¹. Then x ⊕̂ y = (x∗̂ ·̂ y∗̂)∗̂ on Ŝ, and pulling it
    back must reproduce the ⊕ table of A exactly.
    """
    sections = global_sections(join_odot_reduct(algebra))
    if not sections.isomorphism or sections.table is None:
        return MvSectionsReport(algebra, sections, None, None, None)

    phi = sections.phi
    inv = sections.inverse()
    carried = {x: phi[algebra.star(inv[x])] for x in sections.table.elements}
    try:
        recognition = recognize_mv_semiring(sections.table)
    except CapExceeded:
        recognition = None

    recognized: bool | None = None
    star_agrees: bool | None = None
    star = carried
    if recognition is not None:
        if recognition.star is None:
            return MvSectionsReport(algebra, sections, None, None, False)
        recognized, star = True, recognition.star
        star_agrees = star == carried
    transported = reconstruct_mv(sections.table, star)

    mismatch = None
    for a in algebra.elements:
        for b in algebra.elements:
            if phi[algebra.oplus(a, b)] != transported.oplus(phi[a], phi[b]):
                mismatch = (a, b)
                break
        if mismatch:
            break

    return MvSectionsReport(algebra, sections, transported, mismatch, recognized, star_agrees)
