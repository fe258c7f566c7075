"""
Finite semimodules over finite semirings.

A (left) S-semimodule is a join-semilattice <M, ∨, 0> with an action
S x M -> M such that

    (SM1) <M, ∨, 0> is an idempotent commutative monoid
    (SM2) (ab)x = a(bx)
    (SM3) (a ∨ b)x = ax ∨ bx
    (SM4) a(x ∨ y) = ax ∨ ay
    (SM5) 0x = 0 = a0 and 1x = x

Like semirings, semimodules are stored as index tables and checked
exhaustively on construction. Homomorphisms are found by fixing images of
a generating set and propagating along ∨ and the action; a conflicting
propagation rejects the candidate.
"""

import itertools
from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import cache, cached_property

from mvring.algebra import Value
from mvring.config import HOM_MAX_CANDIDATES, PROJECTIVE_MAX_CANDIDATES, check_cap
from mvring.formatting import format_value
from mvring.semiring import SemiringTable

from .matrix import FreeVector, SemimoduleError, SqMatrix


class FiniteSemimodule:
    """
    A finite semimodule given by its join and action tables.

    Usage:
        m = free_semimodule(boolean_semiring(), 2)
        m.join((0, 1), (1, 0))   # (1, 1)
        m.act(0, (1, 1))         # (0, 0)
    """

    def __init__(
        self,
        name: str,
        semiring: SemiringTable,
        elements: Sequence[Value],
        join_table: Sequence[Sequence[int]],
        action_table: Sequence[Sequence[int]],
        zero_index: int,
        validate: bool = True,
    ):
        n = len(elements)
        if n == 0:
            raise SemimoduleError("a semimodule needs at least one element")
        if len(join_table) != n or any(len(r) != n for r in join_table):
            raise SemimoduleError(f"∨ table must be {n}x{n}")
        if len(action_table) != len(semiring) or any(len(r) != n for r in action_table):
            raise SemimoduleError(f"action table must be {len(semiring)}x{n}")

        self.name = name
        self.semiring = semiring
        self.elements: tuple[Value, ...] = tuple(elements)
        self.join_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in join_table)
        self.action_table: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in action_table)
        self.zero_index = zero_index
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != n:
            raise SemimoduleError("carrier elements must be distinct")

        if validate:
            problem = self.violation()
            if problem is not None:
                raise SemimoduleError(f"{name} is not a semimodule: {problem}")

    @classmethod
    def from_operations(
        cls,
        name: str,
        semiring: SemiringTable,
        elements: Sequence[Value],
        join: Callable[[Value, Value], Value],
        act: Callable[[Value, Value], Value],
        zero: Value,
    ) -> "FiniteSemimodule":
        """
        Tabulate join and the action on a carrier.

        Raises:
            SemimoduleError: If an operation leaves the carrier or a law fails
        """
        index = {x: i for i, x in enumerate(elements)}

        def lookup(v: Value) -> int:
            try:
                return index[v]
            except KeyError:
                raise SemimoduleError(
                    f"{format_value(v)} is not in the carrier of {name}"
                ) from None

        join_table = [[lookup(join(x, y)) for y in elements] for x in elements]
        action_table = [[lookup(act(a, x)) for x in elements] for a in semiring.elements]
        return cls(name, semiring, elements, join_table, action_table, lookup(zero))

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
            raise SemimoduleError(f"{format_value(x)} is not an element of {self.name}") from None

    @property
    def zero(self) -> Value:
        return self.elements[self.zero_index]

    def join(self, x: Value, y: Value) -> Value:
        return self.elements[self.join_table[self.index(x)][self.index(y)]]

    def act(self, a: Value, x: Value) -> Value:
        return self.elements[self.action_table[self.semiring.index(a)][self.index(x)]]

    def leq(self, x: Value, y: Value) -> bool:
        return self.join(x, y) == y

    def join_all(self, values: Iterable[Value]) -> Value:
        result = self.zero
        for v in values:
            result = self.join(result, v)
        return result

    def describe(self, decimal: bool = False) -> str:
        return "{" + ", ".join(format_value(x, decimal) for x in self.elements) + "}"

    def __repr__(self) -> str:
        return f"FiniteSemimodule({self.name!r}, {len(self)} elements over {self.semiring.name})"

    # ------------------------------------------------------------------------
    # Laws
    # ------------------------------------------------------------------------

    def violation(self) -> str | None:
        """Describe the first failing semimodule law (SM1-SM5), or None."""
        s = self.semiring
        n, k = len(self), len(s)
        j, act, z = self.join_table, self.action_table, self.zero_index
        sj, sm = s.join_table, s.mul_table
        e = self.elements

        def show(*idx: int) -> str:
            return ", ".join(format_value(e[i]) for i in idx)

        for x in range(n):
            if j[x][x] != x:
                return f"(SM1) ∨ is not idempotent at {show(x)}"
            if j[x][z] != x:
                return f"(SM1) 0 is not the ∨-identity at {show(x)}"
            if act[s.zero_index][x] != z:
                return f"(SM5) 0·x != 0 at x = {show(x)}"
            if act[s.one_index][x] != x:
                return f"(SM5) 1·x != x at x = {show(x)}"
            for y in range(n):
                if j[x][y] != j[y][x]:
                    return f"(SM1) ∨ is not commutative at {show(x, y)}"
                for w in range(n):
                    if j[x][j[y][w]] != j[j[x][y]][w]:
                        return f"(SM1) ∨ is not associative at {show(x, y, w)}"
        for a in range(k):
            label = format_value(s.elements[a])
            if act[a][z] != z:
                return f"(SM5) a·0 != 0 at a = {label}"
            for b in range(k):
                for x in range(n):
                    if act[sm[a][b]][x] != act[a][act[b][x]]:
                        return f"(SM2) (ab)x != a(bx) at a = {label}, x = {show(x)}"
                    if act[sj[a][b]][x] != j[act[a][x]][act[b][x]]:
                        return f"(SM3) (a ∨ b)x != ax ∨ bx at a = {label}, x = {show(x)}"
            for x in range(n):
                for y in range(n):
                    if act[a][j[x][y]] != j[act[a][x]][act[a][y]]:
                        return f"(SM4) a(x ∨ y) != ax ∨ ay at a = {label}, x, y = {show(x, y)}"
        return None

    # ------------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------------

    def closure(self, seed: Iterable[Value]) -> frozenset:
        """Indices of the sub-semimodule generated by seed."""
        found = {self.zero_index}
        queue = deque(self.index(x) for x in seed)
        while queue:
            x = queue.popleft()
            if x in found:
                continue
            found.add(x)
            for row in self.action_table:
                if row[x] not in found:
                    queue.append(row[x])
            for y in list(found):
                v = self.join_table[x][y]
                if v not in found:
                    queue.append(v)
        return frozenset(found)

    @cached_property
    def generators(self) -> tuple[Value, ...]:
        """
        A generating set, chosen greedily in canonical order.

        An element is added when it is not yet in the sub-semimodule spanned
        by the earlier choices, so no generator is redundant at the moment
        it is picked.
        """
        gens: list[Value] = []
        spanned = frozenset({self.zero_index})
        for i, x in enumerate(self.elements):
            if i not in spanned:
                gens.append(x)
                spanned = self.closure(gens)
        return tuple(gens)

    def submodule(self, seed: Iterable[Value], name: str | None = None) -> "FiniteSemimodule":
        """The sub-semimodule generated by seed, in this module's element order."""
        keep = sorted(self.closure(seed))
        return self.restrict(keep, name)

    def restrict(self, indices: Sequence[int], name: str | None = None) -> "FiniteSemimodule":
        """
        Restrict to a subset of indices that is closed under ∨ and the action.

        Raises:
            SemimoduleError: If the subset is not closed
        """
        pos = {old: new for new, old in enumerate(indices)}
        try:
            join_table = [[pos[self.join_table[x][y]] for y in indices] for x in indices]
            action_table = [[pos[row[x]] for x in indices] for row in self.action_table]
            zero = pos[self.zero_index]
        except KeyError:
            raise SemimoduleError("subset is not closed under ∨ and the action") from None
        return FiniteSemimodule(
            name or f"sub({self.name})",
            self.semiring,
            [self.elements[i] for i in indices],
            join_table,
            action_table,
            zero,
            validate=False,
        )


# ============================================================================
# Constructions
# ============================================================================


@cache
def free_semimodule(semiring: SemiringTable, n: int) -> FiniteSemimodule:
    """
    S^n with coordinatewise ∨ and a·(v_1, ..., v_n) = (a v_1, ..., a v_n).

    Elements are tuples in lexicographic order; S^0 is the one-element
    module {()}. Results are shared per (semiring, n); treat them as
    read-only.
    """
    if n < 0:
        raise SemimoduleError(f"dimension must be nonnegative, got {n}")
    s = semiring
    elements = list(itertools.product(s.elements, repeat=n))
    return FiniteSemimodule.from_operations(
        f"{s.name}^{n}",
        s,
        elements,
        lambda x, y: tuple(s.join(p, q) for p, q in zip(x, y, strict=True)),
        lambda a, x: tuple(s.mul(a, p) for p in x),
        (s.zero,) * n,
    )


def row_semimodule(u: SqMatrix, name: str | None = None) -> FiniteSemimodule:
    """
    The sub-semimodule of S^n spanned by the rows of u.

    Elements are ordered lexicographically, like those of S^n.
    """
    s = u.semiring
    free = free_semimodule(s, u.n_cols)
    return free.submodule(u.rows, name or f"row({u})")


def vector(module: FiniteSemimodule, x: Value) -> FreeVector:
    """View an element of a sub-semimodule of S^n as a FreeVector."""
    return FreeVector(module.semiring, tuple(module.elements[module.index(x)]))


# ============================================================================
# Homomorphisms
# ============================================================================


@dataclass(frozen=True)
class SemimoduleMap:
    """
    A map between finite semimodules over the same semiring.

    Attributes:
        source: Domain
        target: Codomain
        images: Target index of each source element, in source order
    """

    source: FiniteSemimodule
    target: FiniteSemimodule
    images: tuple[int, ...]

    @classmethod
    def build(
        cls,
        source: FiniteSemimodule,
        target: FiniteSemimodule,
        fn: Callable[[Value], Value],
    ) -> "SemimoduleMap":
        """
        Tabulate fn and verify it is a homomorphism.

        Raises:
            SemimoduleError: If fn leaves the target or breaks a law
        """
        images = tuple(target.index(fn(x)) for x in source.elements)
        f = cls(source, target, images)
        problem = f.violation()
        if problem is not None:
            raise SemimoduleError(f"not a homomorphism: {problem}")
        return f

    def __call__(self, x: Value) -> Value:
        return self.target.elements[self.images[self.source.index(x)]]

    def violation(self) -> str | None:
        """Describe the first failure of f(0) = 0, f(x ∨ y) = fx ∨ fy or f(ax) = a fx."""
        m, n, f = self.source, self.target, self.images
        if f[m.zero_index] != n.zero_index:
            return "f(0) != 0"
        for x in range(len(m)):
            for y in range(len(m)):
                if f[m.join_table[x][y]] != n.join_table[f[x]][f[y]]:
                    shown = f"{format_value(m.elements[x])}, {format_value(m.elements[y])}"
                    return f"f(x ∨ y) != f(x) ∨ f(y) at {shown}"
            for a, (row_m, row_n) in enumerate(zip(m.action_table, n.action_table, strict=True)):
                if f[row_m[x]] != row_n[f[x]]:
                    shown = f"{format_value(m.semiring.elements[a])}, {format_value(m.elements[x])}"
                    return f"f(ax) != a f(x) at {shown}"
        return None

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == len(self.images)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == len(self.target)

    def then(self, g: "SemimoduleMap") -> "SemimoduleMap":
        """g ∘ self."""
        if g.source is not self.target:
            raise SemimoduleError("maps do not compose")
        return SemimoduleMap(self.source, g.target, tuple(g.images[i] for i in self.images))

    def is_identity(self) -> bool:
        return self.source is self.target and self.images == tuple(range(len(self.source)))


def identity_hom(module: FiniteSemimodule) -> SemimoduleMap:
    return SemimoduleMap(module, module, tuple(range(len(module))))


def _propagate(
    m: FiniteSemimodule, n: FiniteSemimodule, assigned: dict[int, int]
) -> tuple[int, ...] | None:
    # Every join pair is visited once the later of its two elements is
    # dequeued, and every action once its element is dequeued.
    f: list[int | None] = [None] * len(m)
    queue: deque[int] = deque()
    for x, v in ((m.zero_index, n.zero_index), *assigned.items()):
        if f[x] is None:
            f[x] = v
            queue.append(x)
        elif f[x] != v:
            return None
    known: list[int] = []
    while queue:
        x = queue.popleft()
        known.append(x)
        edges = [
            (row_m[x], row_n[f[x]])
            for row_m, row_n in zip(m.action_table, n.action_table, strict=True)
        ]
        edges += [(m.join_table[x][y], n.join_table[f[x]][f[y]]) for y in known]
        for target, value in edges:
            if f[target] is None:
                f[target] = value
                queue.append(target)
            elif f[target] != value:
                return None
    if any(v is None for v in f):
        return None
    return tuple(f)  # type: ignore[arg-type]


def enumerate_homs(m: FiniteSemimodule, n: FiniteSemimodule) -> list[SemimoduleMap]:
    """
    Every homomorphism m -> n, ordered by the images of m's generators.

    Raises:
        CapExceeded: If |N|^(number of generators) exceeds HOM_MAX_CANDIDATES
        SemimoduleError: If the modules are over different semirings
    """
    if not m.semiring.same_tables(n.semiring):
        raise SemimoduleError("semimodules are over different semirings")
    gens = [m.index(g) for g in m.generators]
    check_cap("HOM_MAX_CANDIDATES", len(n) ** len(gens), HOM_MAX_CANDIDATES)
    homs = []
    for choice in itertools.product(range(len(n)), repeat=len(gens)):
        images = _propagate(m, n, dict(zip(gens, choice, strict=True)))
        if images is not None:
            homs.append(SemimoduleMap(m, n, images))
    return homs


def find_isomorphism(m: FiniteSemimodule, n: FiniteSemimodule) -> SemimoduleMap | None:
    """
    A bijective homomorphism m -> n, or None.

    The inverse of a bijective homomorphism is again one, so bijectivity is
    all that needs checking once the candidate is a homomorphism.
    """
    if len(m) != len(n) or not m.semiring.same_tables(n.semiring):
        return None
    gens = [m.index(g) for g in m.generators]
    check_cap("HOM_MAX_CANDIDATES", len(n) ** len(gens), HOM_MAX_CANDIDATES)
    for choice in itertools.product(range(len(n)), repeat=len(gens)):
        if len(set(choice)) != len(choice):
            continue
        images = _propagate(m, n, dict(zip(gens, choice, strict=True)))
        if images is not None and len(set(images)) == len(images):
            return SemimoduleMap(m, n, images)
    return None


def is_isomorphic(m: FiniteSemimodule, n: FiniteSemimodule) -> bool:
    return find_isomorphism(m, n) is not None


# ============================================================================
# Projectivity
# ============================================================================


@dataclass
class ProjectivityResult:
    """
    Outcome of searching for a retraction of S^n onto a module.

    Attributes:
        module: The module tested
        n: Rank of the free module searched
        projection: p: S^n -> M with p ∘ section = id, if found
        section: The splitting M -> S^n, if found
        candidates: Number of (section, projection) pairs examined
    """

    module: FiniteSemimodule
    n: int
    projection: SemimoduleMap | None
    section: SemimoduleMap | None
    candidates: int

    @property
    def projective(self) -> bool:
        return self.projection is not None


def basis_hom(
    free: FiniteSemimodule, m: FiniteSemimodule, images: Sequence[int]
) -> SemimoduleMap:
    """The unique homomorphism S^n -> M sending χ_i to images[i]."""
    s = free.semiring
    n = len(images)
    table = []
    for v in free.elements:
        acc = m.zero_index
        for i in range(n):
            acc = m.join_table[acc][m.action_table[s.index(v[i])][images[i]]]
        table.append(acc)
    return SemimoduleMap(free, m, tuple(table))


def brute_force_projective(m: FiniteSemimodule, n: int) -> ProjectivityResult:
    """
    Decide whether m is a retract of S^n by exhaustive search.

    Every homomorphism S^n -> M is fixed by the images of the n basis
    vectors, so projections are enumerated directly; sections are the
    homomorphisms M -> S^n.

    Raises:
        CapExceeded: If the number of (section, projection) pairs exceeds
            PROJECTIVE_MAX_CANDIDATES
    """
    free = free_semimodule(m.semiring, n)
    gens = len(m.generators)
    requested = len(m) ** n * len(free) ** gens
    check_cap("PROJECTIVE_MAX_CANDIDATES", requested, PROJECTIVE_MAX_CANDIDATES)
    sections = [h for h in enumerate_homs(m, free) if h.is_injective]
    tried = 0
    for images in itertools.product(range(len(m)), repeat=n):
        p = basis_hom(free, m, images)
        for section in sections:
            tried += 1
            if all(p.images[section.images[x]] == x for x in range(len(m))):
                return ProjectivityResult(m, n, p, section, tried)
    return ProjectivityResult(m, n, None, None, tried)
