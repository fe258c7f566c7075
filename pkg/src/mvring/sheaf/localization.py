"""
Localization of a finite commutative semiring.

For a multiplicatively closed D ⊆ S, fractions a/b with b ∈ D are
identified by

    (a, b) ~ (c, d)   iff   a·d·k = b·c·k for some k ∈ D

and combined with

    a/b ∨ c/d = (ad ∨ bc)/bd        (a/b)·(c/d) = ac/bd

The localization at a prime P uses D = S ∖ P. Class representatives prefer
denominator 1, then the canonical order of the denominator and numerator.
"""

from collections.abc import Iterable
from dataclasses import dataclass, field

from mvring.algebra import Value
from mvring.formatting import format_value
from mvring.semiring import SemiringIdeal, SemiringTable, is_prime_ideal, maximal_ideals


class SheafError(Exception):
    """Raised for invalid denominator sets, primes and section data."""

    pass


@dataclass(frozen=True)
class LocalFraction:
    """
    A fraction a/b of a localization.

    Attributes:
        numerator: a ∈ S
        denominator: b ∈ D
    """

    numerator: Value
    denominator: Value

    def format(self, decimal: bool = False) -> str:
        num = format_value(self.numerator, decimal)
        return f"{num} / {format_value(self.denominator, decimal)}"

    def __str__(self) -> str:
        return self.format()


def _related(
    s: SemiringTable, denominators: list[Value], p: LocalFraction, q: LocalFraction
) -> bool:
    lhs = s.mul(p.numerator, q.denominator)
    rhs = s.mul(p.denominator, q.numerator)
    return any(s.mul(lhs, k) == s.mul(rhs, k) for k in denominators)


def _require_denominators(s: SemiringTable, denominators: Iterable[Value]) -> list[Value]:
    d = [x for x in s.elements if x in set(denominators)]
    if s.one not in d:
        raise SheafError("the denominator set must contain 1")
    for a in d:
        for b in d:
            if s.mul(a, b) not in d:
                raise SheafError(
                    f"denominators are not multiplicatively closed: "
                    f"{format_value(a)} · {format_value(b)} is missing"
                )
    if not s.is_commutative:
        raise SheafError(f"{s.name} is not commutative")
    return d


@dataclass
class EquivalenceReport:
    """
    Exhaustive check that ~ is an equivalence on S x D.

    Attributes:
        pairs: Number of fractions a/b
        reflexive_failures: Fractions not related to themselves
        symmetric_failures: Ordered pairs related one way only
        transitive_failures: Triples breaking transitivity
    """

    pairs: int
    reflexive_failures: list[LocalFraction] = field(default_factory=list)
    symmetric_failures: list[tuple[LocalFraction, LocalFraction]] = field(default_factory=list)
    transitive_failures: list[tuple[LocalFraction, ...]] = field(default_factory=list)

    @property
    def is_equivalence(self) -> bool:
        return not (
            self.reflexive_failures or self.symmetric_failures or self.transitive_failures
        )


def equivalence_report(s: SemiringTable, denominators: Iterable[Value]) -> EquivalenceReport:
    """Scan reflexivity, symmetry and transitivity of ~ on S x D."""
    d = _require_denominators(s, denominators)
    fractions = [LocalFraction(a, b) for b in d for a in s.elements]
    n = len(fractions)
    rel = [[_related(s, d, p, q) for q in fractions] for p in fractions]
    report = EquivalenceReport(n)
    for i in range(n):
        if not rel[i][i]:
            report.reflexive_failures.append(fractions[i])
        for j in range(n):
            if rel[i][j] and not rel[j][i]:
                report.symmetric_failures.append((fractions[i], fractions[j]))
            if not rel[i][j]:
                continue
            for k in range(n):
                if rel[j][k] and not rel[i][k]:
                    report.transitive_failures.append((fractions[i], fractions[j], fractions[k]))
    return report


@dataclass
class Localization:
    """
    S_D as a semiring of fraction classes.

    Attributes:
        semiring: S
        denominators: D in canonical order
        class_of: Every fraction -> its class representative
        table: The localized semiring; elements are representatives
        well_defined_problem: A fraction pair whose ∨ or · lands in
            different classes for equivalent inputs, or None
        prime: The prime P when D = S ∖ P
    """

    semiring: SemiringTable
    denominators: list[Value]
    class_of: dict[LocalFraction, LocalFraction]
    table: SemiringTable
    well_defined_problem: str | None
    prime: SemiringIdeal | None = None

    def fraction(self, a: Value, b: Value | None = None) -> LocalFraction:
        """The class [a/b], with b = 1 by default."""
        b = self.semiring.one if b is None else b
        try:
            return self.class_of[LocalFraction(a, b)]
        except KeyError:
            raise SheafError(
                f"{format_value(b)} is not a denominator of this localization"
            ) from None

    @property
    def is_local(self) -> bool:
        """Exactly one maximal ideal."""
        return len(maximal_ideals(self.table)) == 1


def localize_at(
    s: SemiringTable, denominators: Iterable[Value], name: str | None = None
) -> Localization:
    """
    Build S_D.

    Raises:
        SheafError: If D is not multiplicatively closed or S is not commutative
    """
    d = _require_denominators(s, denominators)
    one = s.one
    fractions = [LocalFraction(a, b) for b in d for a in s.elements]
    fractions.sort(
        key=lambda f: (f.denominator != one, s.index(f.denominator), s.index(f.numerator))
    )

    class_of: dict[LocalFraction, LocalFraction] = {}
    reps: list[LocalFraction] = []
    for f in fractions:
        for r in reps:
            if _related(s, d, f, r):
                class_of[f] = r
                break
        else:
            class_of[f] = f
            reps.append(f)

    def join(p: LocalFraction, q: LocalFraction) -> LocalFraction:
        num = s.join(s.mul(p.numerator, q.denominator), s.mul(p.denominator, q.numerator))
        return class_of[LocalFraction(num, s.mul(p.denominator, q.denominator))]

    def mul(p: LocalFraction, q: LocalFraction) -> LocalFraction:
        return class_of[
            LocalFraction(s.mul(p.numerator, q.numerator), s.mul(p.denominator, q.denominator))
        ]

    problem = None
    for p in fractions:
        for q in fractions:
            rp, rq = class_of[p], class_of[q]
            if join(p, q) != join(rp, rq) or mul(p, q) != mul(rp, rq):
                problem = f"operations on {p} and {q} depend on the representatives"
                break
        if problem:
            break

    table = SemiringTable.from_operations(
        name or f"{s.name}_D",
        reps,
        join,
        mul,
        class_of[LocalFraction(s.zero, one)],
        class_of[LocalFraction(one, one)],
    )
    return Localization(s, d, class_of, table, problem)


def localize(s: SemiringTable, prime: SemiringIdeal) -> Localization:
    """
    The localization S_P at a prime ideal.

    Raises:
        SheafError: If P is not a prime ideal of S
    """
    if not is_prime_ideal(prime):
        raise SheafError(f"{prime.describe()} is not a prime ideal of {s.name}")
    loc = localize_at(
        s, [x for x in s.elements if x not in prime], f"{s.name}_{prime.describe()}"
    )
    loc.prime = prime
    return loc
