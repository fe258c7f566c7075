"""
Ideals and prime spectrum of a finite semiring.

A semiring ideal is a nonempty subset closed under ∨ and under
multiplication by arbitrary elements. Unlike MV-ideals it need not be
downward closed, so the semiring spectrum of A∨⊙ and the MV spectrum of A
can differ: on Chain(2) the zero ideal is MV-prime but not semiring-prime,
because ½ ⊙ ½ = 0.

Multiplication is closed on both sides, which is the same thing for the
commutative semirings this package mostly deals with.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from mvring.algebra import Value
from mvring.formatting import format_value

from .table import SemiringTable


@dataclass(frozen=True)
class SemiringIdeal:
    """
    An ideal of a finite semiring.

    Attributes:
        semiring: The owning semiring
        elements: The ideal's elements
    """

    semiring: SemiringTable
    elements: frozenset

    @property
    def is_proper(self) -> bool:
        return self.semiring.one not in self.elements

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> tuple[Value, ...]:
        return tuple(x for x in self.semiring.elements if x in self.elements)

    def sort_key(self) -> tuple:
        return (len(self.elements), sorted(self.semiring.index(x) for x in self.elements))

    def describe(self, decimal: bool = False) -> str:
        return "{" + ", ".join(format_value(x, decimal) for x in self.sorted_elements()) + "}"


def ideal_closure(s: SemiringTable, seed: Iterable[Value]) -> SemiringIdeal:
    """The smallest semiring ideal containing seed (and 0)."""
    found = {s.zero, *seed}
    changed = True
    while changed:
        changed = False
        for x in list(found):
            for y in s.elements:
                for v in (s.mul(x, y), s.mul(y, x)):
                    if v not in found:
                        found.add(v)
                        changed = True
            for y in list(found):
                v = s.join(x, y)
                if v not in found:
                    found.add(v)
                    changed = True
    return SemiringIdeal(s, frozenset(found))


def semiring_ideals(s: SemiringTable) -> list[SemiringIdeal]:
    """Every ideal of s, ordered by size then canonical elements."""
    found = {ideal_closure(s, [x]).elements for x in s.elements}
    changed = True
    while changed:
        changed = False
        for i in list(found):
            for j in list(found):
                joined = ideal_closure(s, i | j).elements
                if joined not in found:
                    found.add(joined)
                    changed = True
    return sorted((SemiringIdeal(s, f) for f in found), key=SemiringIdeal.sort_key)


def is_prime_ideal(ideal: SemiringIdeal) -> bool:
    """A proper ideal P is prime if ab ∈ P implies a ∈ P or b ∈ P."""
    if not ideal.is_proper:
        return False
    s = ideal.semiring
    for a in s.elements:
        if a in ideal:
            continue
        for b in s.elements:
            if b not in ideal and s.mul(a, b) in ideal:
                return False
    return True


def maximal_ideals(
    s: SemiringTable, ideals: list[SemiringIdeal] | None = None
) -> list[SemiringIdeal]:
    """Proper ideals not strictly contained in another proper ideal."""
    ideals = semiring_ideals(s) if ideals is None else ideals
    proper = [i for i in ideals if i.is_proper]
    return [i for i in proper if not any(i.elements < j.elements for j in proper)]


@dataclass
class RSpectrum:
    """
    Prime spectrum of a finite semiring.

    Attributes:
        semiring: The semiring
        ideals: All ideals
        primes: Prime ideals, in ideal order
        maximal: Maximal ideals
        basis: U(a) per element, as indices into `primes`
    """

    semiring: SemiringTable
    ideals: list[SemiringIdeal]
    primes: list[SemiringIdeal]
    maximal: list[SemiringIdeal]
    basis: dict[Value, list[int]]


def r_spec(s: SemiringTable) -> RSpectrum:
    """Enumerate ideals, flag primes and emit the Zariski basis U(a)."""
    ideals = semiring_ideals(s)
    primes = [i for i in ideals if is_prime_ideal(i)]
    maximal = maximal_ideals(s, ideals)
    basis = {x: [n for n, p in enumerate(primes) if x not in p] for x in s.elements}
    return RSpectrum(s, ideals, primes, maximal, basis)
