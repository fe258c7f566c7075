"""
The min-plus semifield over the integers and its Γ truncation.

An idempotent semifield <F, ∧, +, −, ⊤, 0, u> is presented here on
ℤ ∪ {⊤}: semiring addition is the minimum (with identity ⊤), semiring
multiplication is integer addition (with identity 0 and ⊤ absorbing), and
every element except ⊤ has the inverse −a. Deleting ⊤ leaves the
lattice-ordered group <ℤ, +, −, 0>.

Truncating at a strong unit u > 0 gives the MV-algebra

    Γ(F) = {0, 1, ..., u},   x ⊕ y = (x + y) ∧ u,   x∗ = u − x,

which is the chain Chain(u) with integer labels. The clamp

    γ(a) = (a ∨ 0) ∧ u,      γ(⊤) = u

preserves ∧ everywhere but only turns + into ⊕ on the nonnegative cone:
for u = 2, γ(−5 + 3) = 0 while γ(−5) ⊕ γ(3) = 2. check_gamma reports those
failures instead of hiding them.

⊤ is a sentinel object, never a large integer.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Final

from mvring.algebra import FiniteMvAlgebra

from .table import SemiringError


class _Top:
    """The top element ⊤ of the semifield."""

    _instance: "_Top | None" = None

    def __new__(cls) -> "_Top":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "⊤"

    def __str__(self) -> str:
        return "top"

    def __reduce__(self):
        return (_Top, ())


TOP: Final = _Top()

FieldValue = int | _Top


def parse_field_value(text: str) -> FieldValue:
    """
    Parse "top" or an integer.

    Raises:
        SemiringError: If the text is neither
    """
    if text.strip().lower() in ("top", "⊤"):
        return TOP
    try:
        return int(text)
    except ValueError:
        raise SemiringError(f"expected an integer or 'top', got {text!r}") from None


@dataclass(frozen=True)
class MinPlusSemifield:
    """
    The idempotent semifield ℤ ∪ {⊤} with strong unit u.

    Attributes:
        unit: The strong unit u (a positive integer)
    """

    unit: int

    def __post_init__(self):
        if self.unit < 1:
            raise SemiringError(f"the unit must be a positive integer, got {self.unit}")

    def contains(self, a: object) -> bool:
        return a is TOP or (isinstance(a, int) and not isinstance(a, bool))

    def meet(self, a: FieldValue, b: FieldValue) -> FieldValue:
        """Semiring addition a ∧ b (minimum, ⊤ is the identity)."""
        if a is TOP:
            return b
        if b is TOP:
            return a
        return min(a, b)

    def join(self, a: FieldValue, b: FieldValue) -> FieldValue:
        """Lattice join a ∨ b (maximum, ⊤ absorbs)."""
        if a is TOP or b is TOP:
            return TOP
        return max(a, b)

    def add(self, a: FieldValue, b: FieldValue) -> FieldValue:
        """Semiring multiplication a + b (⊤ absorbs)."""
        if a is TOP or b is TOP:
            return TOP
        return a + b

    def neg(self, a: FieldValue) -> int:
        """
        Group inverse −a.

        Raises:
            SemiringError: For ⊤, which has no inverse
        """
        if a is TOP:
            raise SemiringError("⊤ has no inverse")
        return -a

    @property
    def zero(self) -> _Top:
        return TOP

    @property
    def one(self) -> int:
        return 0

    def default_sample(self) -> tuple[FieldValue, ...]:
        """Integers from −2u−1 to 2u+1, then ⊤."""
        u = self.unit
        return (*range(-2 * u - 1, 2 * u + 2), TOP)


def lgroup_semifield_bridge(unit: int) -> MinPlusSemifield:
    """
    The semifield obtained from the ℓ-group ℤ by adjoining ⊤.

    Raises:
        SemiringError: If unit <= 0
    """
    return MinPlusSemifield(unit)


@dataclass
class LawCheck:
    """
    One law checked on a sample.

    Attributes:
        name: The law
        checked: Number of assignments visited
        witness: First counterexample, or None
    """

    name: str
    checked: int
    witness: tuple[FieldValue, ...] | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None


def _scan(name: str, values: Iterable[tuple], holds) -> LawCheck:
    checked = 0
    for v in values:
        checked += 1
        if not holds(*v):
            return LawCheck(name, checked, v)
    return LawCheck(name, checked)


def check_semifield_laws(
    f: MinPlusSemifield, sample: Sequence[FieldValue] | None = None
) -> list[LawCheck]:
    """Check the semifield laws on every pair and triple of sample values."""
    s = tuple(f.default_sample() if sample is None else sample)
    pairs = [(a, b) for a in s for b in s]
    triples = [(a, b, c) for a in s for b in s for c in s]
    finite = [a for a in s if a is not TOP]
    return [
        _scan("∧ idempotent", ((a,) for a in s), lambda a: f.meet(a, a) == a),
        _scan("∧ commutative", pairs, lambda a, b: f.meet(a, b) == f.meet(b, a)),
        _scan(
            "∧ associative",
            triples,
            lambda a, b, c: f.meet(a, f.meet(b, c)) == f.meet(f.meet(a, b), c),
        ),
        _scan("⊤ is the ∧-identity", ((a,) for a in s), lambda a: f.meet(a, TOP) == a),
        _scan("+ commutative", pairs, lambda a, b: f.add(a, b) == f.add(b, a)),
        _scan(
            "+ associative",
            triples,
            lambda a, b, c: f.add(a, f.add(b, c)) == f.add(f.add(a, b), c),
        ),
        _scan("0 is the +-identity", ((a,) for a in s), lambda a: f.add(a, 0) == a),
        _scan(
            "⊤ absorbs +",
            ((a,) for a in s),
            lambda a: f.add(a, TOP) is TOP and f.add(TOP, a) is TOP,
        ),
        _scan(
            "+ distributes over ∧",
            triples,
            lambda a, b, c: f.add(a, f.meet(b, c)) == f.meet(f.add(a, b), f.add(a, c)),
        ),
        _scan("a + (−a) = 0", ((a,) for a in finite), lambda a: f.add(a, f.neg(a)) == 0),
        _scan("u is positive", [(f.unit,)], lambda u: u > 0),
    ]


@dataclass
class GammaTruncation:
    """
    Γ(F) together with the clamp γ: F -> Γ(F).

    Attributes:
        semifield: The source semifield
        algebra: Γ(F), the chain {0, ..., u} with integer labels
    """

    semifield: MinPlusSemifield
    algebra: FiniteMvAlgebra

    def gamma(self, a: FieldValue) -> int:
        """γ(a) = (a ∨ 0) ∧ u, with γ(⊤) = u."""
        u = self.semifield.unit
        if a is TOP:
            return u
        return min(max(a, 0), u)


def gamma_truncate(f: MinPlusSemifield) -> GammaTruncation:
    """Build Γ(F) for the semifield's unit."""
    u = f.unit
    elements = list(range(u + 1))
    oplus_table = [[min(x + y, u) for y in elements] for x in elements]
    star_table = [u - x for x in elements]
    algebra = FiniteMvAlgebra(f"gamma:{u}", elements, oplus_table, star_table)
    return GammaTruncation(f, algebra)


@dataclass
class GammaReport:
    """
    Homomorphism checks for γ.

    Attributes:
        meet_failures: Pairs (a, b) with γ(a ∧ b) != γ(a) ∧ γ(b)
        cone_sum_failures: Pairs from the nonnegative cone (or ⊤) with
            γ(a + b) != γ(a) ⊕ γ(b)
        sum_failures: Every pair with γ(a + b) != γ(a) ⊕ γ(b)
        checked: Number of pairs visited
    """

    meet_failures: list[tuple[FieldValue, FieldValue]] = field(default_factory=list)
    cone_sum_failures: list[tuple[FieldValue, FieldValue]] = field(default_factory=list)
    sum_failures: list[tuple[FieldValue, FieldValue]] = field(default_factory=list)
    checked: int = 0

    @property
    def holds_on_cone(self) -> bool:
        return not self.meet_failures and not self.cone_sum_failures


def check_gamma(
    truncation: GammaTruncation, sample: Sequence[FieldValue] | None = None
) -> GammaReport:
    """
    Check that γ preserves ∧ everywhere and + on the nonnegative cone.

    Failures of the sum law off the cone are collected in sum_failures.
    """
    f, gamma, target = truncation.semifield, truncation.gamma, truncation.algebra
    s = tuple(f.default_sample() if sample is None else sample)
    report = GammaReport()
    for a in s:
        for b in s:
            report.checked += 1
            if gamma(f.meet(a, b)) != min(gamma(a), gamma(b)):
                report.meet_failures.append((a, b))
            if gamma(f.add(a, b)) != target.oplus(gamma(a), gamma(b)):
                report.sum_failures.append((a, b))
                if (a is TOP or a >= 0) and (b is TOP or b >= 0):
                    report.cone_sum_failures.append((a, b))
    return report
