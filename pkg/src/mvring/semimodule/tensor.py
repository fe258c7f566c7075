"""
Tensor products of finite semimodules over a commutative semiring.

M ⊗ N is the free join-semilattice on M x N (finite subsets under union)
modulo the congruence generated by

    {(x ∨ x', y)} ~ {(x, y), (x', y)}     {(x, y ∨ y')} ~ {(x, y), (x, y')}
    {(0, y)} ~ ∅ ~ {(x, 0)}               {(a x, y)} ~ {(x, a y)}

A join congruence on a powerset generated by pairs X ~ Y has the closure
system "X ⊆ D iff Y ⊆ D" as its quotient, so each tensor is represented by
its closed set of pairs. Closed sets are bitmasks over M x N here, and the
carrier is enumerated by joining pure tensors until nothing new appears.
"""

import itertools
from collections import deque
from dataclasses import dataclass, field

from mvring.algebra import Value
from mvring.config import HOM_MAX_CANDIDATES, TENSOR_MAX_PAIRS, check_cap
from mvring.formatting import format_value

from .matrix import SemimoduleError
from .module import FiniteSemimodule, SemimoduleMap, enumerate_homs


def _implications(
    m: FiniteSemimodule, n: FiniteSemimodule
) -> tuple[int, list[tuple[int, int]]]:
    """The always-closed base mask and the two-way implications X <-> Y."""
    width = len(n)

    def bit(x: int, y: int) -> int:
        return 1 << (x * width + y)

    base = 0
    for x in range(len(m)):
        base |= bit(x, n.zero_index)
    for y in range(len(n)):
        base |= bit(m.zero_index, y)

    rules: list[tuple[int, int]] = []
    for y in range(len(n)):
        for x in range(len(m)):
            for x2 in range(x + 1, len(m)):
                rules.append((bit(m.join_table[x][x2], y), bit(x, y) | bit(x2, y)))
    for x in range(len(m)):
        for y in range(len(n)):
            for y2 in range(y + 1, len(n)):
                rules.append((bit(x, n.join_table[y][y2]), bit(x, y) | bit(x, y2)))
    for row_m, row_n in zip(m.action_table, n.action_table, strict=True):
        for x in range(len(m)):
            for y in range(len(n)):
                rules.append((bit(row_m[x], y), bit(x, row_n[y])))
    both = [r for lhs, rhs in rules if lhs != rhs for r in ((lhs, rhs), (rhs, lhs))]
    return base, both


@dataclass
class TensorProduct:
    """
    M ⊗ N with its canonical map.

    Attributes:
        left: M
        right: N
        module: M ⊗ N; its elements are closed sets of pairs (frozensets)
        masks: Bitmask of each element of module, in the same order
    """

    left: FiniteSemimodule
    right: FiniteSemimodule
    module: FiniteSemimodule
    masks: list[int]
    _base: int = field(repr=False)
    _rules: list[tuple[int, int]] = field(repr=False)

    def close(self, mask: int) -> int:
        mask |= self._base
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self._rules:
                if mask & lhs == lhs and mask & rhs != rhs:
                    mask |= rhs
                    changed = True
        return mask

    def pair_bit(self, x: Value, y: Value) -> int:
        return 1 << (self.left.index(x) * len(self.right) + self.right.index(y))

    def tensor(self, x: Value, y: Value) -> frozenset:
        """The canonical map (x, y) ↦ x ⊗ y."""
        return self.module.elements[self.masks.index(self.close(self.pair_bit(x, y)))]

    def format(self, element: frozenset, decimal: bool = False) -> str:
        """Render an element as a join of its maximal pure tensors."""
        m, n = self.left, self.right
        # Pairs in the closure of ∅ are zero tensors even when neither side is 0.
        zero = self.close(0)
        tops = [
            (x, y)
            for x, y in element
            if not zero & self.pair_bit(x, y)
            and not any(
                (x2, y2) != (x, y) and m.leq(x, x2) and n.leq(y, y2) for x2, y2 in element
            )
        ]
        if not tops:
            return "0"
        tops.sort(key=lambda p: (m.index(p[0]), n.index(p[1])))
        return " ∨ ".join(
            f"{format_value(x, decimal)}⊗{format_value(y, decimal)}" for x, y in tops
        )


def tensor_product(m: FiniteSemimodule, n: FiniteSemimodule) -> TensorProduct:
    """
    Build M ⊗ N.

    Raises:
        CapExceeded: If |M x N| exceeds TENSOR_MAX_PAIRS
        SemimoduleError: If the semirings differ or are not commutative
    """
    check_cap("TENSOR_MAX_PAIRS", len(m) * len(n), TENSOR_MAX_PAIRS)
    s = m.semiring
    if not s.same_tables(n.semiring):
        raise SemimoduleError("semimodules are over different semirings")
    if not s.is_commutative:
        raise SemimoduleError(f"{s.name} is not commutative")

    base, rules = _implications(m, n)
    shell = TensorProduct(m, n, m, [], base, rules)
    width = len(n)
    pures = {shell.close(1 << p) for p in range(len(m) * width)}
    zero = shell.close(0)
    seen = {zero}
    queue = deque([zero])
    while queue:
        c = queue.popleft()
        for g in pures:
            d = shell.close(c | g)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    masks = sorted(seen, key=lambda v: (v.bit_count(), v))

    def pairs_of(mask: int) -> frozenset:
        return frozenset(
            (m.elements[p // width], n.elements[p % width])
            for p in range(len(m) * width)
            if mask >> p & 1
        )

    position = {v: i for i, v in enumerate(masks)}
    join_table = [[position[shell.close(a | b)] for b in masks] for a in masks]
    action_table = []
    for row_m in m.action_table:
        row = []
        for c in masks:
            image = 0
            for p in range(len(m) * width):
                if c >> p & 1:
                    image |= 1 << (row_m[p // width] * width + p % width)
            row.append(position[shell.close(image)])
        action_table.append(row)
    module = FiniteSemimodule(
        f"{m.name}⊗{n.name}",
        s,
        [pairs_of(v) for v in masks],
        join_table,
        action_table,
        position[zero],
    )
    return TensorProduct(m, n, module, masks, base, rules)


# ============================================================================
# Bimorphisms and the universal property
# ============================================================================


def bimorphism_violation(
    m: FiniteSemimodule,
    n: FiniteSemimodule,
    target: FiniteSemimodule,
    beta: dict[tuple[int, int], int],
) -> str | None:
    """Describe the first bimorphism law broken by beta (indices), or None."""
    jt, zt = target.join_table, target.zero_index
    for x in range(len(m)):
        if beta[(x, n.zero_index)] != zt:
            return "β(x, 0) != 0"
    for y in range(len(n)):
        if beta[(m.zero_index, y)] != zt:
            return "β(0, y) != 0"
        for x in range(len(m)):
            for x2 in range(len(m)):
                if beta[(m.join_table[x][x2], y)] != jt[beta[(x, y)]][beta[(x2, y)]]:
                    return "β(x ∨ x', y) != β(x, y) ∨ β(x', y)"
    for x in range(len(m)):
        for y in range(len(n)):
            for y2 in range(len(n)):
                if beta[(x, n.join_table[y][y2])] != jt[beta[(x, y)]][beta[(x, y2)]]:
                    return "β(x, y ∨ y') != β(x, y) ∨ β(x, y')"
    actions = zip(m.action_table, n.action_table, target.action_table, strict=True)
    for row_m, row_n, row_t in actions:
        for x in range(len(m)):
            for y in range(len(n)):
                scaled = row_t[beta[(x, y)]]
                if beta[(row_m[x], y)] != scaled or beta[(x, row_n[y])] != scaled:
                    return "β(ax, y) = β(x, ay) = aβ(x, y) fails"
    return None


def _propagate_bimorphism(
    m: FiniteSemimodule,
    n: FiniteSemimodule,
    target: FiniteSemimodule,
    assigned: dict[tuple[int, int], int],
) -> dict[tuple[int, int], int] | None:
    beta: dict[tuple[int, int], int] = {}
    queue: deque[tuple[int, int]] = deque()

    def put(p: tuple[int, int], v: int) -> bool:
        old = beta.get(p)
        if old is None:
            beta[p] = v
            queue.append(p)
            return True
        return old == v

    zt = target.zero_index
    seeds = [((x, n.zero_index), zt) for x in range(len(m))]
    seeds += [((m.zero_index, y), zt) for y in range(len(n))]
    for p, v in [*seeds, *assigned.items()]:
        if not put(p, v):
            return None
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    while queue:
        x, y = queue.popleft()
        v = beta[(x, y)]
        by_row.setdefault(y, []).append(x)
        by_col.setdefault(x, []).append(y)
        for row_m, row_n, row_t in zip(
            m.action_table, n.action_table, target.action_table, strict=True
        ):
            if not put((row_m[x], y), row_t[v]) or not put((x, row_n[y]), row_t[v]):
                return None
        for x2 in by_row[y]:
            if not put((m.join_table[x][x2], y), target.join_table[v][beta[(x2, y)]]):
                return None
        for y2 in by_col[x]:
            if not put((x, n.join_table[y][y2]), target.join_table[v][beta[(x, y2)]]):
                return None
    if len(beta) != len(m) * len(n):
        return None
    return beta


def enumerate_bimorphisms(
    m: FiniteSemimodule, n: FiniteSemimodule, target: FiniteSemimodule
) -> list[dict[tuple[int, int], int]]:
    """
    Every bimorphism M x N -> L, as index dictionaries.

    A bimorphism is fixed by its values on pairs of generators.

    Raises:
        CapExceeded: If |L|^(|G_M| |G_N|) exceeds HOM_MAX_CANDIDATES
    """
    gm = [m.index(g) for g in m.generators]
    gn = [n.index(g) for g in n.generators]
    cells = list(itertools.product(gm, gn))
    check_cap("HOM_MAX_CANDIDATES", len(target) ** len(cells), HOM_MAX_CANDIDATES)
    found = []
    for choice in itertools.product(range(len(target)), repeat=len(cells)):
        beta = _propagate_bimorphism(m, n, target, dict(zip(cells, choice, strict=True)))
        if beta is not None:
            found.append(beta)
    return found


@dataclass
class UniversalPropertyReport:
    """
    Factorization of bimorphisms through M ⊗ N, per target module.

    Attributes:
        tensor: The tensor product checked
        canonical_problem: Why (x, y) ↦ x ⊗ y is not a bimorphism, or None
        counts: Per target name, (bimorphisms, homs out of M ⊗ N)
        failures: Targets with a bimorphism that does not factor
    """

    tensor: TensorProduct
    canonical_problem: str | None
    counts: dict[str, tuple[int, int]]
    failures: list[str]

    @property
    def holds(self) -> bool:
        return (
            self.canonical_problem is None
            and not self.failures
            and all(b == h for b, h in self.counts.values())
        )


def canonical_bimorphism(t: TensorProduct) -> dict[tuple[int, int], int]:
    m, n = t.left, t.right
    return {
        (x, y): t.module.index(t.tensor(m.elements[x], n.elements[y]))
        for x in range(len(m))
        for y in range(len(n))
    }


def check_universal_property(
    t: TensorProduct, targets: list[FiniteSemimodule]
) -> UniversalPropertyReport:
    """
    Check that every bimorphism into each target factors through M ⊗ N.

    For each bimorphism β the candidate h(C) = ⋁_{(x, y) ∈ C} β(x, y) must be
    a homomorphism with h(x ⊗ y) = β(x, y); the number of bimorphisms must
    also equal the number of homomorphisms M ⊗ N -> L.
    """
    m, n, tm = t.left, t.right, t.module
    canonical = canonical_bimorphism(t)
    problem = bimorphism_violation(m, n, tm, canonical)
    counts: dict[str, tuple[int, int]] = {}
    failures: list[str] = []
    for target in targets:
        bimorphisms = enumerate_bimorphisms(m, n, target)
        homs = enumerate_homs(tm, target)
        counts[target.name] = (len(bimorphisms), len(homs))
        for beta in bimorphisms:
            images = []
            for element in tm.elements:
                acc = target.zero_index
                for x, y in element:
                    acc = target.join_table[acc][beta[(m.index(x), n.index(y))]]
                images.append(acc)
            h = SemimoduleMap(tm, target, tuple(images))
            factors = all(h.images[canonical[p]] == v for p, v in beta.items())
            if h.violation() is not None or not factors:
                failures.append(target.name)
                break
    return UniversalPropertyReport(t, problem, counts, failures)


def tensor_swap_isomorphism(m: FiniteSemimodule, n: FiniteSemimodule) -> SemimoduleMap:
    """
    The isomorphism M ⊗ N -> N ⊗ M sending x ⊗ y to y ⊗ x.

    Raises:
        SemimoduleError: If the swap fails to be a bijective homomorphism
    """
    left, right = tensor_product(m, n), tensor_product(n, m)
    f = SemimoduleMap.build(
        left.module,
        right.module,
        lambda c: frozenset((y, x) for x, y in c),
    )
    if not (f.is_injective and f.is_surjective):
        raise SemimoduleError("the swap map is not a bijection")
    return f
