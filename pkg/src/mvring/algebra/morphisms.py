"""
Homomorphisms between finite MV-algebras.

A map h: A -> B is an MV-homomorphism when it preserves ⊕, ∗ and 0; the
derived operations then come for free. Homomorphisms are stored as explicit
value tables and verified exhaustively on construction.
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass

from mvring.formatting import format_value

from .algebra import FiniteMvAlgebra, MvAlgebraError, Value
from .ideals import QuotientAlgebra


@dataclass(frozen=True)
class MvHomomorphism:
    """
    A verified MV-homomorphism between finite algebras.

    Attributes:
        source: Domain algebra
        target: Codomain algebra
        images: Source value -> target value, one entry per source element

    Usage:
        a = chain(2)
        p = product(a, a)
        first = projection(p, 0)
        first((Fraction(1, 2), Fraction(1)))   # Fraction(1, 2)
    """

    source: FiniteMvAlgebra
    target: FiniteMvAlgebra
    images: tuple[tuple[Value, Value], ...]

    @classmethod
    def build(
        cls,
        source: FiniteMvAlgebra,
        target: FiniteMvAlgebra,
        fn: Callable[[Value], Value] | Mapping[Value, Value],
    ) -> "MvHomomorphism":
        """
        Tabulate fn on the source carrier and verify the homomorphism laws.

        Raises:
            MvAlgebraError: If fn leaves the target or breaks ⊕, ∗ or 0
        """
        lookup = fn.__getitem__ if isinstance(fn, Mapping) else fn
        images = tuple((x, lookup(x)) for x in source.elements)
        h = cls(source, target, images)
        witness = h.violation()
        if witness is not None:
            raise MvAlgebraError(
                f"not an MV-homomorphism {source.name} -> {target.name}: {witness}"
            )
        return h

    @property
    def table(self) -> dict[Value, Value]:
        return dict(self.images)

    def __call__(self, x: Value) -> Value:
        try:
            return self.table[x]
        except KeyError:
            raise MvAlgebraError(f"{format_value(x)} is not in {self.source.name}") from None

    def violation(self) -> str | None:
        """Describe the first broken law, or None if h is a homomorphism."""
        s, t, h = self.source, self.target, self.table
        for x in s.elements:
            if not t.contains(h[x]):
                return f"h({format_value(x)}) = {format_value(h[x])} is not in {t.name}"
        if h[s.zero] != t.zero:
            return f"h(0) = {format_value(h[s.zero])}"
        for x in s.elements:
            if h[s.star(x)] != t.star(h[x]):
                return f"h({format_value(x)}∗) != h({format_value(x)})∗"
            for y in s.elements:
                if h[s.oplus(x, y)] != t.oplus(h[x], h[y]):
                    return f"h({format_value(x)} ⊕ {format_value(y)}) != h(x) ⊕ h(y)"
        return None

    def is_injective(self) -> bool:
        return len(set(self.table.values())) == len(self.source)

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.target.elements)

    def then(self, g: "MvHomomorphism") -> "MvHomomorphism":
        """The composite g ∘ self."""
        if g.source != self.target:
            raise MvAlgebraError(f"cannot compose: {self.target.name} != {g.source.name}")
        gt = g.table
        return MvHomomorphism(
            self.source, g.target, tuple((x, gt[y]) for x, y in self.images)
        )


def identity(algebra: FiniteMvAlgebra) -> MvHomomorphism:
    return MvHomomorphism(algebra, algebra, tuple((x, x) for x in algebra.elements))


def projection(algebra: FiniteMvAlgebra, i: int) -> MvHomomorphism:
    """
    The i-th coordinate projection of a product algebra.

    Raises:
        MvAlgebraError: If the algebra is not a product or i is out of range
    """
    if not algebra.factors:
        raise MvAlgebraError(f"{algebra.name} is not a product")
    if not 0 <= i < len(algebra.factors):
        raise MvAlgebraError(f"{algebra.name} has no factor {i}")
    return MvHomomorphism.build(algebra, algebra.factors[i], lambda x: x[i])


def diagonal(algebra: FiniteMvAlgebra, target: FiniteMvAlgebra) -> MvHomomorphism:
    """
    The diagonal embedding x -> (x, ..., x) into a power of algebra.

    Raises:
        MvAlgebraError: If target is not a product of copies of algebra
    """
    if not target.factors or any(f != algebra for f in target.factors):
        raise MvAlgebraError(f"{target.name} is not a power of {algebra.name}")
    n = len(target.factors)
    return MvHomomorphism.build(algebra, target, lambda x: (x,) * n)


def quotient_map(q: QuotientAlgebra) -> MvHomomorphism:
    """The canonical surjection A -> A/I."""
    return MvHomomorphism.build(q.parent, q.algebra, q.class_map)


def find_isomorphism(a: FiniteMvAlgebra, b: FiniteMvAlgebra) -> MvHomomorphism | None:
    """
    Search for an MV-isomorphism a -> b.

    Backtracks over bijections in canonical order, checking ⊕ and ∗ on the
    already-assigned elements at every step. Returns the first isomorphism
    found, or None.
    """
    if len(a) != len(b):
        return None
    n = len(a)
    if sum(map(a.is_boolean, a.elements)) != sum(map(b.is_boolean, b.elements)):
        return None

    # 0 goes first so that h(0) = 0 is forced immediately.
    order = [a.zero_index] + [i for i in range(n) if i != a.zero_index]
    image: dict[int, int] = {}
    used: set[int] = set()

    def consistent(i: int) -> bool:
        j = image[i]
        si, sj = a.star_table[i], b.star_table[j]
        if si in image and image[si] != sj:
            return False
        if si == i and sj != j:
            return False
        for k, l in image.items():
            s = a.oplus_table[i][k]
            if s in image and image[s] != b.oplus_table[j][l]:
                return False
            for m, p in image.items():
                if a.oplus_table[k][m] == i and b.oplus_table[l][p] != j:
                    return False
        return True

    def search(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        candidates = [b.zero_index] if pos == 0 else range(n)
        for j in candidates:
            if j in used:
                continue
            image[i] = j
            used.add(j)
            if consistent(i) and search(pos + 1):
                return True
            del image[i]
            used.discard(j)
        return False

    if not search(0):
        return None
    h = MvHomomorphism(
        a, b, tuple((a.elements[i], b.elements[image[i]]) for i in range(n))
    )
    return h if h.violation() is None else None


def is_isomorphic(a: FiniteMvAlgebra, b: FiniteMvAlgebra) -> bool:
    return find_isomorphism(a, b) is not None
