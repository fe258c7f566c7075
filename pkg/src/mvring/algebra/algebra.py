"""
MV-algebra carriers and operations.

An MV-algebra is a structure <A, ⊕, ∗, 0> where ⊕ is a commutative monoid
operation with identity 0, ∗ is an involution, x ⊕ 0∗ = 0∗, and the
"Łukasiewicz axiom" (x∗ ⊕ y)∗ ⊕ y = (y∗ ⊕ x)∗ ⊕ x holds. Everything else is
derived from ⊕ and ∗:

    1       = 0∗
    x ⊙ y   = (x∗ ⊕ y∗)∗
    x ⊖ y   = x ⊙ y∗
    x → y   = x∗ ⊕ y
    x ∨ y   = (x ⊙ y∗) ⊕ y
    x ∧ y   = (x∗ ∨ y∗)∗
    x ≤ y  iff  x∗ ⊕ y = 1
    d(x, y) = (x ⊙ y∗) ⊕ (y ⊙ x∗)

Three kinds of carrier are supported:

- Chain(k): the Łukasiewicz chain {0, 1/k, ..., 1} with x ⊕ y = min(x+y, 1)
  and x∗ = 1 - x.
- Product(A1, ..., An): componentwise operations on tuples.
- UnitInterval: the standard algebra on exact rationals in [0, 1].

Finite algebras store the full ⊕ and ∗ tables (indices into the canonical
element list). The derived operations are always computed from those two
tables, so a corrupted ⊕ table really does corrupt ⊙, ∨, and friends.

Canonical element order: a chain is ascending, a product is lexicographic in
the factor orders. Reports depend on this order, so it never changes.
"""

import itertools
from abc import ABC, abstractmethod
from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from mvring.formatting import format_value

# Carrier values: Fractions for chains and the unit interval, nested tuples
# for products, plain ints for algebras loaded from bare tables.
Value = Hashable


class MvAlgebraError(Exception):
    """Raised for invalid MV-algebra constructions or mixed-algebra operands."""

    pass


class MvAlgebra(ABC):
    """
    Base class for MV-algebras.

    Subclasses provide the primitive operations (oplus, star), the zero
    element and a membership test. All derived operations live here.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Spec string naming this algebra (e.g. "chain:4")."""

    @property
    @abstractmethod
    def zero(self) -> Value:
        """The neutral element of ⊕."""

    @property
    @abstractmethod
    def is_finite(self) -> bool:
        """Whether the carrier can be enumerated."""

    @abstractmethod
    def contains(self, x: Value) -> bool:
        """Whether x belongs to the carrier."""

    @abstractmethod
    def oplus(self, x: Value, y: Value) -> Value:
        """Truncated sum x ⊕ y."""

    @abstractmethod
    def star(self, x: Value) -> Value:
        """Involution x∗."""

    @property
    def one(self) -> Value:
        return self.star(self.zero)

    def odot(self, x: Value, y: Value) -> Value:
        return self.star(self.oplus(self.star(x), self.star(y)))

    def ominus(self, x: Value, y: Value) -> Value:
        return self.odot(x, self.star(y))

    def arrow(self, x: Value, y: Value) -> Value:
        return self.oplus(self.star(x), y)

    def join(self, x: Value, y: Value) -> Value:
        return self.oplus(self.odot(x, self.star(y)), y)

    def meet(self, x: Value, y: Value) -> Value:
        return self.star(self.join(self.star(x), self.star(y)))

    def leq(self, x: Value, y: Value) -> bool:
        return self.oplus(self.star(x), y) == self.one

    def distance(self, x: Value, y: Value) -> Value:
        """Chang distance d(x, y) = (x ⊙ y∗) ⊕ (y ⊙ x∗)."""
        return self.oplus(self.odot(x, self.star(y)), self.odot(y, self.star(x)))

    def is_boolean(self, x: Value) -> bool:
        """Whether x is idempotent for ⊕ (x belongs to the Boolean center)."""
        return self.oplus(x, x) == x

    def element(self, value: object) -> "MvElement":
        """
        Wrap a carrier value as an MvElement.

        Raises:
            MvAlgebraError: If the value is not in the carrier
        """
        if not self.contains(value):
            raise MvAlgebraError(f"{format_value(value)} is not an element of {self.name}")
        return MvElement(self, value)

    def label(self, x: Value, decimal: bool = False) -> str:
        return format_value(x, decimal)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class FiniteMvAlgebra(MvAlgebra):
    """
    A finite MV-algebra given by explicit ⊕ and ∗ tables.

    Tables hold indices into `elements`. Construction does not check the MV
    laws (corrupted tables are a legitimate input for law checking); use
    `mvring.algebra.laws.check_axioms` for that.

    Usage:
        a = chain(4)
        a.oplus(Fraction(1, 2), Fraction(3, 4))   # Fraction(1, 1)
        b = product(chain(2), chain(2))
        b.elements[:3]                            # ((0, 0), (0, 1/2), (0, 1))
    """

    def __init__(
        self,
        name: str,
        elements: Sequence[Value],
        oplus_table: Sequence[Sequence[int]],
        star_table: Sequence[int],
        zero_index: int = 0,
        factors: Sequence["FiniteMvAlgebra"] = (),
    ):
        n = len(elements)
        if n == 0:
            raise MvAlgebraError("an MV-algebra needs at least one element")
        if len(oplus_table) != n or any(len(row) != n for row in oplus_table):
            raise MvAlgebraError(f"⊕ table must be {n}x{n}")
        if len(star_table) != n:
            raise MvAlgebraError(f"∗ table must have {n} entries")
        for i in itertools.chain(itertools.chain.from_iterable(oplus_table), star_table):
            if not 0 <= i < n:
                raise MvAlgebraError(f"table entry {i} is out of range for {n} elements")
        if not 0 <= zero_index < n:
            raise MvAlgebraError(f"zero index {zero_index} is out of range")

        self._name = name
        self.elements: tuple[Value, ...] = tuple(elements)
        self.oplus_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in oplus_table)
        self.star_table: tuple[int, ...] = tuple(star_table)
        self.zero_index = zero_index
        self.factors: tuple[FiniteMvAlgebra, ...] = tuple(factors)
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != n:
            raise MvAlgebraError("carrier elements must be distinct")

    @property
    def name(self) -> str:
        return self._name

    @property
    def zero(self) -> Value:
        return self.elements[self.zero_index]

    @property
    def is_finite(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def contains(self, x: Value) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x: Value) -> int:
        """
        Canonical index of a carrier element.

        Raises:
            MvAlgebraError: If x is not in the carrier
        """
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise MvAlgebraError(f"{format_value(x)} is not an element of {self.name}") from None

    def oplus(self, x: Value, y: Value) -> Value:
        return self.elements[self.oplus_table[self.index(x)][self.index(y)]]

    def star(self, x: Value) -> Value:
        return self.elements[self.star_table[self.index(x)]]

    @cached_property
    def odot_table(self) -> tuple[tuple[int, ...], ...]:
        """⊙ as an index table, derived from ⊕ and ∗."""
        e = self.elements
        return tuple(tuple(self.index(self.odot(x, y)) for y in e) for x in e)

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        e = self.elements
        return tuple(tuple(self.index(self.join(x, y)) for y in e) for x in e)

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        e = self.elements
        return tuple(tuple(self.index(self.meet(x, y)) for y in e) for x in e)

    def with_tables(
        self,
        oplus_table: Sequence[Sequence[int]] | None = None,
        star_table: Sequence[int] | None = None,
        name: str | None = None,
    ) -> "FiniteMvAlgebra":
        """Copy of this algebra with one or both tables replaced."""
        return FiniteMvAlgebra(
            name or f"table:{self.name}",
            self.elements,
            self.oplus_table if oplus_table is None else oplus_table,
            self.star_table if star_table is None else star_table,
            self.zero_index,
        )

    def _key(self) -> tuple:
        return (self.elements, self.oplus_table, self.star_table, self.zero_index)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteMvAlgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


class UnitInterval(MvAlgebra):
    """
    The standard MV-algebra on the rationals of [0, 1].

    x ⊕ y = min(x + y, 1) and x∗ = 1 - x, computed exactly with Fraction.
    """

    @property
    def name(self) -> str:
        return "unit"

    @property
    def zero(self) -> Value:
        return Fraction(0)

    @property
    def is_finite(self) -> bool:
        return False

    def contains(self, x: Value) -> bool:
        if isinstance(x, bool) or not isinstance(x, Fraction | int):
            return False
        return 0 <= x <= 1

    def _check(self, x: Value) -> Fraction:
        if not self.contains(x):
            raise MvAlgebraError(f"{format_value(x)} is not a rational in [0, 1]")
        return Fraction(x)  # type: ignore[arg-type]

    def oplus(self, x: Value, y: Value) -> Value:
        return min(self._check(x) + self._check(y), Fraction(1))

    def star(self, x: Value) -> Value:
        return 1 - self._check(x)

    def grid(self, q: int) -> tuple[Fraction, ...]:
        """The sample grid {0, 1/q, ..., 1}."""
        if q < 1:
            raise MvAlgebraError(f"grid resolution must be positive, got {q}")
        return tuple(Fraction(i, q) for i in range(q + 1))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UnitInterval)

    def __hash__(self) -> int:
        return hash("unit")


@dataclass(frozen=True)
class MvElement:
    """
    An element bound to its algebra.

    Operations between elements of different algebras are rejected.

    Attributes:
        algebra: The owning algebra
        value: The carrier value (Fraction, tuple, or int)
    """

    algebra: MvAlgebra
    value: Value

    def _other(self, other: "MvElement") -> Value:
        if other.algebra != self.algebra:
            raise MvAlgebraError(
                f"operands belong to different algebras: {self.algebra.name} "
                f"and {other.algebra.name}"
            )
        return other.value

    def _wrap(self, value: Value) -> "MvElement":
        return MvElement(self.algebra, value)

    def oplus(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.oplus(self.value, self._other(other)))

    def star(self) -> "MvElement":
        return self._wrap(self.algebra.star(self.value))

    def odot(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.odot(self.value, self._other(other)))

    def ominus(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.ominus(self.value, self._other(other)))

    def arrow(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.arrow(self.value, self._other(other)))

    def join(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.join(self.value, self._other(other)))

    def meet(self, other: "MvElement") -> "MvElement":
        return self._wrap(self.algebra.meet(self.value, self._other(other)))

    def leq(self, other: "MvElement") -> bool:
        return self.algebra.leq(self.value, self._other(other))

    def __str__(self) -> str:
        return self.algebra.label(self.value)


def chain(k: int) -> FiniteMvAlgebra:
    """
    The Łukasiewicz chain with k+1 elements {0, 1/k, ..., 1}.

    Args:
        k: Number of steps (k >= 1; chain(1) is the two-element Boolean algebra)

    Raises:
        MvAlgebraError: If k < 1
    """
    if k < 1:
        raise MvAlgebraError(f"chain needs k >= 1, got {k}")
    elements = [Fraction(i, k) for i in range(k + 1)]
    oplus_table = [[min(i + j, k) for j in range(k + 1)] for i in range(k + 1)]
    star_table = [k - i for i in range(k + 1)]
    return FiniteMvAlgebra(f"chain:{k}", elements, oplus_table, star_table)


def product(*factors: FiniteMvAlgebra) -> FiniteMvAlgebra:
    """
    Direct product of finite MV-algebras, elements ordered lexicographically.

    Raises:
        MvAlgebraError: If fewer than two factors are given
    """
    if len(factors) < 2:
        raise MvAlgebraError("a product needs at least two factors")
    elements = list(itertools.product(*(f.elements for f in factors)))
    index = {x: i for i, x in enumerate(elements)}

    def oplus(x: tuple, y: tuple) -> tuple:
        return tuple(f.oplus(a, b) for f, a, b in zip(factors, x, y, strict=True))

    def star(x: tuple) -> tuple:
        return tuple(f.star(a) for f, a in zip(factors, x, strict=True))

    oplus_table = [[index[oplus(x, y)] for y in elements] for x in elements]
    star_table = [index[star(x)] for x in elements]
    zero_index = index[tuple(f.zero for f in factors)]
    name = "product:" + ",".join(_wrap_spec(f.name) for f in factors)
    return FiniteMvAlgebra(name, elements, oplus_table, star_table, zero_index, factors)


def _wrap_spec(spec: str) -> str:
    return f"({spec})" if "," in spec else spec
