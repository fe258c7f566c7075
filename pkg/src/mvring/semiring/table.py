"""
Finite semirings as explicit operation tables.

A semiring <S, ∨, ·, 0, 1> here is always additively idempotent:

    (S1) <S, ∨, 0> is an idempotent commutative monoid
    (S2) <S, ·, 1> is a monoid
    (S3) · distributes over ∨ on both sides
    (S4) a · 0 = 0 = 0 · a

The laws are checked exhaustively when a table is built. Tables hold
indices into the carrier list, in the same canonical order as the algebra
the semiring came from.
"""

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from mvring.algebra import Value
from mvring.formatting import format_value


class SemiringError(Exception):
    """Raised for invalid semiring tables and semiring maps."""

    pass


class SemiringTable:
    """
    A finite additively idempotent semiring.

    Usage:
        s = SemiringTable.from_operations(
            "bool", [0, 1], join=max, mul=min, zero=0, one=1
        )
        s.mul(1, 1)   # 1
        s.leq(0, 1)   # True
    """

    def __init__(
        self,
        name: str,
        elements: Sequence[Value],
        join_table: Sequence[Sequence[int]],
        mul_table: Sequence[Sequence[int]],
        zero_index: int,
        one_index: int,
        validate: bool = True,
    ):
        n = len(elements)
        if n == 0:
            raise SemiringError("a semiring needs at least one element")
        for table, label in ((join_table, "∨"), (mul_table, "·")):
            if len(table) != n or any(len(row) != n for row in table):
                raise SemiringError(f"{label} table must be {n}x{n}")
            if any(not 0 <= v < n for row in table for v in row):
                raise SemiringError(f"{label} table has out-of-range entries")

        self.name = name
        self.elements: tuple[Value, ...] = tuple(elements)
        self.join_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in join_table)
        self.mul_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in mul_table)
        self.zero_index = zero_index
        self.one_index = one_index
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != n:
            raise SemiringError("carrier elements must be distinct")

        if validate:
            problem = self.violation()
            if problem is not None:
                raise SemiringError(f"{name} is not a semiring: {problem}")

    @classmethod
    def from_operations(
        cls,
        name: str,
        elements: Sequence[Value],
        join: Callable[[Value, Value], Value],
        mul: Callable[[Value, Value], Value],
        zero: Value,
        one: Value,
    ) -> "SemiringTable":
        """
        Tabulate join and mul on a carrier.

        Raises:
            SemiringError: If an operation leaves the carrier or a law fails
        """
        index = {x: i for i, x in enumerate(elements)}

        def lookup(v: Value) -> int:
            try:
                return index[v]
            except KeyError:
                raise SemiringError(f"{format_value(v)} is not in the carrier of {name}") from None

        join_table = [[lookup(join(x, y)) for y in elements] for x in elements]
        mul_table = [[lookup(mul(x, y)) for y in elements] for x in elements]
        return cls(name, elements, join_table, mul_table, lookup(zero), lookup(one))

    # ------------------------------------------------------------------------
    # Element access
    # ------------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def index(self, x: Value) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise SemiringError(f"{format_value(x)} is not an element of {self.name}") from None

    @property
    def zero(self) -> Value:
        return self.elements[self.zero_index]

    @property
    def one(self) -> Value:
        return self.elements[self.one_index]

    def join(self, x: Value, y: Value) -> Value:
        return self.elements[self.join_table[self.index(x)][self.index(y)]]

    def mul(self, x: Value, y: Value) -> Value:
        return self.elements[self.mul_table[self.index(x)][self.index(y)]]

    def leq(self, x: Value, y: Value) -> bool:
        """The natural order: x ≤ y iff x ∨ y = y."""
        return self.join(x, y) == y

    def join_all(self, values: Sequence[Value]) -> Value:
        result = self.zero
        for v in values:
            result = self.join(result, v)
        return result

    def label(self, x: Value, decimal: bool = False) -> str:
        return format_value(x, decimal)

    # ------------------------------------------------------------------------
    # Laws
    # ------------------------------------------------------------------------

    @cached_property
    def is_commutative(self) -> bool:
        n = len(self)
        m = self.mul_table
        return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))

    def violation(self) -> str | None:
        """Describe the first failing semiring law (S1-S4), or None."""
        n = len(self)
        j, m, z, o = self.join_table, self.mul_table, self.zero_index, self.one_index
        e = self.elements

        def show(*idx: int) -> str:
            return ", ".join(format_value(e[i]) for i in idx)

        for a in range(n):
            if j[a][a] != a:
                return f"(S1) ∨ is not idempotent at {show(a)}"
            if j[a][z] != a:
                return f"(S1) 0 is not the ∨-identity at {show(a)}"
            if m[a][o] != a or m[o][a] != a:
                return f"(S2) 1 is not the ·-identity at {show(a)}"
            if m[a][z] != z or m[z][a] != z:
                return f"(S4) 0 does not absorb at {show(a)}"
            for b in range(n):
                if j[a][b] != j[b][a]:
                    return f"(S1) ∨ is not commutative at {show(a, b)}"
                for c in range(n):
                    if j[a][j[b][c]] != j[j[a][b]][c]:
                        return f"(S1) ∨ is not associative at {show(a, b, c)}"
                    if m[a][m[b][c]] != m[m[a][b]][c]:
                        return f"(S2) · is not associative at {show(a, b, c)}"
                    if m[a][j[b][c]] != j[m[a][b]][m[a][c]]:
                        return f"(S3) left distributivity fails at {show(a, b, c)}"
                    if m[j[b][c]][a] != j[m[b][a]][m[c][a]]:
                        return f"(S3) right distributivity fails at {show(a, b, c)}"
        return None

    def same_tables(self, other: "SemiringTable") -> bool:
        """Bit-exact comparison of carriers, tables and constants."""
        return (
            self.elements == other.elements
            and self.join_table == other.join_table
            and self.mul_table == other.mul_table
            and self.zero_index == other.zero_index
            and self.one_index == other.one_index
        )

    def __repr__(self) -> str:
        return f"SemiringTable({self.name!r}, {len(self)} elements)"


def boolean_semiring() -> SemiringTable:
    """The two-element Boolean semiring <{0, 1}, max, min, 0, 1>."""
    return SemiringTable("bool", [0, 1], [[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)


def product_semiring(s: SemiringTable, t: SemiringTable) -> SemiringTable:
    """Componentwise product, carrier ordered lexicographically."""
    elements = [(x, y) for x in s.elements for y in t.elements]
    return SemiringTable.from_operations(
        f"{s.name}x{t.name}",
        elements,
        lambda p, q: (s.join(p[0], q[0]), t.join(p[1], q[1])),
        lambda p, q: (s.mul(p[0], q[0]), t.mul(p[1], q[1])),
        (s.zero, t.zero),
        (s.one, t.one),
    )


@dataclass(frozen=True)
class SemiringMap:
    """
    A verified semiring homomorphism (preserves ∨, ·, 0 and 1).

    Attributes:
        source: Domain semiring
        target: Codomain semiring
        images: (source value, target value) pairs in source canonical order
    """

    source: SemiringTable
    target: SemiringTable
    images: tuple[tuple[Value, Value], ...]

    @classmethod
    def build(
        cls,
        source: SemiringTable,
        target: SemiringTable,
        fn: Callable[[Value], Value] | Mapping[Value, Value],
    ) -> "SemiringMap":
        """
        Tabulate fn and verify it is a semiring homomorphism.

        Raises:
            SemiringError: With the first witness if fn is not a homomorphism
        """
        lookup = fn.__getitem__ if isinstance(fn, Mapping) else fn
        h = cls(source, target, tuple((x, lookup(x)) for x in source.elements))
        problem = h.violation()
        if problem is not None:
            raise SemiringError(
                f"not a semiring homomorphism {source.name} -> {target.name}: {problem}"
            )
        return h

    @cached_property
    def table(self) -> dict[Value, Value]:
        return dict(self.images)

    def __call__(self, x: Value) -> Value:
        return self.table[x]

    def violation(self) -> str | None:
        s, t, h = self.source, self.target, self.table
        for x in s.elements:
            if h[x] not in t:
                return f"h({format_value(x)}) = {format_value(h[x])} is outside {t.name}"
        if h[s.zero] != t.zero:
            return "h(0) != 0"
        if h[s.one] != t.one:
            return "h(1) != 1"
        for x in s.elements:
            for y in s.elements:
                if h[s.join(x, y)] != t.join(h[x], h[y]):
                    return f"h({format_value(x)} ∨ {format_value(y)}) != h(x) ∨ h(y)"
                if h[s.mul(x, y)] != t.mul(h[x], h[y]):
                    return f"h({format_value(x)} · {format_value(y)}) != h(x) · h(y)"
        return None

    def is_surjective(self) -> bool:
        return set(self.table.values()) == set(self.target.elements)


def identity_map(s: SemiringTable) -> SemiringMap:
    return SemiringMap(s, s, tuple((x, x) for x in s.elements))
