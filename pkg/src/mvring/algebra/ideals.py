"""
Ideals, congruences, spectra and quotients of finite MV-algebras.

An ideal of an MV-algebra is a downward closed submonoid of <A, ⊕, 0>. The
ideal generated by a set S consists of everything below some finite sum
x1 ⊕ ... ⊕ xn of elements of S, and it is proper exactly when no such sum
reaches 1.

Ideals and congruences correspond one to one: a ~I b iff d(a, b) ∈ I. The
quotient A/I is built from that congruence, each class being represented by
its first element in canonical order.

Because every ideal of a finite algebra is finitely generated, the full
ideal lattice is the closure of the principal ideals under joins, which is
how all_ideals enumerates it.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from mvring.config import CONGRUENCE_MAX_SIZE, check_cap
from mvring.formatting import format_value

from .algebra import FiniteMvAlgebra, MvAlgebra, MvAlgebraError, Value


@dataclass(frozen=True)
class Ideal:
    """
    An ideal of a finite MV-algebra.

    Attributes:
        algebra: The owning algebra
        elements: The ideal's elements
    """

    algebra: FiniteMvAlgebra
    elements: frozenset

    @property
    def is_proper(self) -> bool:
        return self.algebra.one not in self.elements

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> tuple[Value, ...]:
        """Elements in the algebra's canonical order."""
        return tuple(x for x in self.algebra.elements if x in self.elements)

    def sort_key(self) -> tuple:
        return (len(self.elements), sorted(self.algebra.index(x) for x in self.elements))

    def describe(self, decimal: bool = False) -> str:
        return "{" + ", ".join(format_value(x, decimal) for x in self.sorted_elements()) + "}"


def _require_finite(algebra: MvAlgebra) -> FiniteMvAlgebra:
    if not isinstance(algebra, FiniteMvAlgebra):
        raise MvAlgebraError(f"{algebra.name} is infinite; this operation needs a finite algebra")
    return algebra


def is_ideal(algebra: FiniteMvAlgebra, subset: Iterable[Value]) -> bool:
    """Whether subset contains 0 and is downward closed and closed under ⊕."""
    s = frozenset(subset)
    if algebra.zero not in s:
        return False
    for x in s:
        for y in algebra.elements:
            if algebra.leq(y, x) and y not in s:
                return False
        for y in s:
            if algebra.oplus(x, y) not in s:
                return False
    return True


def ideal_generated(algebra: MvAlgebra, seed: Iterable[Value]) -> Ideal:
    """
    The smallest ideal containing seed.

    Collects all finite ⊕-sums of seed elements, then takes everything
    below one of those sums.

    Raises:
        MvAlgebraError: If the algebra is infinite or the seed is not in it
    """
    a = _require_finite(algebra)
    seeds = [a.elements[a.index(x)] for x in seed]

    sums = {a.zero}
    frontier = set(sums)
    while frontier:
        new = {a.oplus(s, x) for s in frontier for x in seeds} - sums
        sums |= new
        frontier = new

    below = frozenset(y for y in a.elements if any(a.leq(y, s) for s in sums))
    return Ideal(a, below)


def all_ideals(algebra: MvAlgebra) -> list[Ideal]:
    """
    Every ideal of a finite algebra, ordered by size then canonical elements.

    Raises:
        MvAlgebraError: If the algebra is infinite
    """
    a = _require_finite(algebra)
    found = {ideal_generated(a, [x]).elements for x in a.elements}
    found.add(frozenset([a.zero]))
    changed = True
    while changed:
        changed = False
        for i in list(found):
            for j in list(found):
                joined = ideal_generated(a, i | j).elements
                if joined not in found:
                    found.add(joined)
                    changed = True
    ideals = [Ideal(a, s) for s in found]
    return sorted(ideals, key=Ideal.sort_key)


def is_prime(ideal: Ideal) -> bool:
    """A proper ideal P is prime if a ∧ b ∈ P implies a ∈ P or b ∈ P."""
    if not ideal.is_proper:
        return False
    a = ideal.algebra
    for x in a.elements:
        for y in a.elements:
            if a.meet(x, y) in ideal and x not in ideal and y not in ideal:
                return False
    return True


@dataclass
class MvSpectrum:
    """
    Ideal-theoretic data of a finite MV-algebra.

    Attributes:
        algebra: The algebra
        ideals: All ideals (proper and improper)
        maximal: Maximal ideals (Max A)
        primes: Prime ideals (MV-Spec A)
        radical: Intersection of all maximal ideals (Rad A)
        basis: U(a) per element, as indices into `primes`
    """

    algebra: FiniteMvAlgebra
    ideals: list[Ideal]
    maximal: list[Ideal]
    primes: list[Ideal]
    radical: frozenset
    basis: dict[Value, list[int]]

    @property
    def is_semisimple(self) -> bool:
        return len(self.algebra) > 1 and self.radical == frozenset([self.algebra.zero])

    @property
    def is_simple(self) -> bool:
        return len(self.algebra) > 1 and len(self.ideals) == 2


def spectra(algebra: MvAlgebra) -> MvSpectrum:
    """
    Enumerate ideals and derive Max A, Rad A, MV-Spec A and the basis U(a).

    Raises:
        MvAlgebraError: If the algebra is infinite
    """
    a = _require_finite(algebra)
    ideals = all_ideals(a)
    proper = [i for i in ideals if i.is_proper]
    maximal = [
        i for i in proper if not any(i.elements < j.elements for j in proper)
    ]
    primes = [i for i in proper if is_prime(i)]

    radical = frozenset(a.elements)
    for m in maximal:
        radical &= m.elements

    basis = {x: [n for n, p in enumerate(primes) if x not in p] for x in a.elements}
    return MvSpectrum(a, ideals, maximal, primes, radical, basis)


# ============================================================================
# Congruences
# ============================================================================


def _close_congruence(a: FiniteMvAlgebra, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """
    Smallest congruence identifying every given pair of element indices.

    The result maps each index to the least index of its class.
    """
    n = len(a)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> bool:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[max(ri, rj)] = min(ri, rj)
        return True

    for i, j in pairs:
        union(i, j)

    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                if find(i) != find(j):
                    continue
                if union(a.star_table[i], a.star_table[j]):
                    changed = True
                for k in range(n):
                    if union(a.oplus_table[i][k], a.oplus_table[j][k]):
                        changed = True
    return tuple(find(i) for i in range(n))


def congruences(algebra: MvAlgebra) -> list[tuple[int, ...]]:
    """
    All congruences of a finite algebra, found without using ideals.

    Each congruence is a tuple mapping element index to the least index of
    its class. Principal congruences are generated from every pair, then
    closed under joins.

    Raises:
        MvAlgebraError: If the algebra is infinite
        CapExceeded: If the algebra has more than CONGRUENCE_MAX_SIZE elements
    """
    a = _require_finite(algebra)
    n = len(a)
    check_cap("CONGRUENCE_MAX_SIZE", n, CONGRUENCE_MAX_SIZE)

    found = {tuple(range(n))}
    for i in range(n):
        for j in range(i + 1, n):
            found.add(_close_congruence(a, [(i, j)]))

    changed = True
    while changed:
        changed = False
        for c in list(found):
            for d in list(found):
                pairs = [*enumerate(c), *enumerate(d)]
                joined = _close_congruence(a, pairs)
                if joined not in found:
                    found.add(joined)
                    changed = True
    return sorted(found)


# ============================================================================
# Quotients
# ============================================================================


@dataclass
class QuotientAlgebra:
    """
    The quotient A/I.

    Attributes:
        parent: The algebra A
        ideal: The ideal I
        class_map: Element of A -> representative of its class
        algebra: A/I, whose elements are the class representatives
        classes_described: Whether each class equals {(a ⊕ b) ⊙ c∗ | b, c ∈ I}
    """

    parent: FiniteMvAlgebra
    ideal: Ideal
    class_map: dict[Value, Value]
    algebra: FiniteMvAlgebra
    classes_described: bool

    def classes(self) -> dict[Value, tuple[Value, ...]]:
        """Representative -> members of its class, in canonical order."""
        out: dict[Value, list[Value]] = {r: [] for r in self.algebra.elements}
        for x in self.parent.elements:
            out[self.class_map[x]].append(x)
        return {r: tuple(v) for r, v in out.items()}


def quotient(algebra: MvAlgebra, ideal: Ideal | Iterable[Value]) -> QuotientAlgebra:
    """
    Build A/I from the congruence a ~ b iff d(a, b) ∈ I.

    Args:
        algebra: A finite MV-algebra
        ideal: An Ideal, or a plain subset that must already be an ideal

    Raises:
        MvAlgebraError: If the subset is not an ideal
    """
    a = _require_finite(algebra)
    members = ideal.elements if isinstance(ideal, Ideal) else frozenset(ideal)
    if not is_ideal(a, members):
        shown = ", ".join(format_value(x) for x in a.elements if x in members)
        raise MvAlgebraError(f"{{{shown}}} is not an ideal of {a.name}")
    ideal = Ideal(a, members)

    class_map: dict[Value, Value] = {}
    reps: list[Value] = []
    for x in a.elements:
        for r in reps:
            if a.distance(x, r) in ideal:
                class_map[x] = r
                break
        else:
            class_map[x] = x
            reps.append(x)

    index = {r: i for i, r in enumerate(reps)}
    oplus_table = [[index[class_map[a.oplus(r, s)]] for s in reps] for r in reps]
    star_table = [index[class_map[a.star(r)]] for r in reps]
    name = f"{a.name}/{ideal.describe()}"
    q = FiniteMvAlgebra(name, reps, oplus_table, star_table, index[class_map[a.zero]])

    classes_described = True
    for x in a.elements:
        expected = {a.odot(a.oplus(x, b), a.star(c)) for b in members for c in members}
        actual = {y for y in a.elements if class_map[y] == class_map[x]}
        if expected != actual:
            classes_described = False
            break

    return QuotientAlgebra(a, ideal, class_map, q, classes_described)
