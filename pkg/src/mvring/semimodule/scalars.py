"""
Restriction of scalars and the matrix/endomorphism correspondence.
"""

from dataclasses import dataclass, field

from mvring.semiring import SemiringMap, SemiringTable

from .matrix import (
    SemimoduleError,
    SqMatrix,
    all_matrices,
    apply_matrix,
    characteristic,
    identity_matrix,
    matrix_join,
    matrix_star,
    zero_matrix,
)
from .module import FiniteSemimodule, SemimoduleMap, enumerate_homs, free_semimodule, vector


def restrict_scalars(h: SemiringMap, module: FiniteSemimodule) -> FiniteSemimodule:
    """
    View a T-semimodule as an S-semimodule along h: S -> T, via a·x = h(a)·x.

    Raises:
        SemimoduleError: If h is not a semiring map into module's semiring
    """
    problem = h.violation()
    if problem is not None:
        raise SemimoduleError(f"not a semiring map: {problem}")
    if not h.target.same_tables(module.semiring):
        raise SemimoduleError(f"{module.name} is not a module over {h.target.name}")
    t = module.semiring
    action_table = [module.action_table[t.index(h(a))] for a in h.source.elements]
    return FiniteSemimodule(
        f"{module.name}|{h.source.name}",
        h.source,
        module.elements,
        module.join_table,
        action_table,
        module.zero_index,
    )


@dataclass
class FullnessReport:
    """
    Whether restriction along h is full on a family of T-modules.

    Attributes:
        pairs: Number of (M, N) pairs compared
        missing: (M name, N name, image tuple) for S-linear maps that are
            not T-linear
    """

    pairs: int = 0
    missing: list[tuple[str, str, tuple[int, ...]]] = field(default_factory=list)

    @property
    def full(self) -> bool:
        return not self.missing


def is_full_embedding(h: SemiringMap, modules: list[FiniteSemimodule]) -> FullnessReport:
    """
    Compare Hom_T(M, N) with Hom_S(M_h, N_h) for every pair of modules.

    Restriction is always faithful and injective on objects; this checks
    that it is also full, i.e. every S-linear map is already T-linear.
    """
    report = FullnessReport()
    restricted = [restrict_scalars(h, m) for m in modules]
    for m, mh in zip(modules, restricted, strict=True):
        for n, nh in zip(modules, restricted, strict=True):
            report.pairs += 1
            over_t = {f.images for f in enumerate_homs(m, n)}
            for f in enumerate_homs(mh, nh):
                if f.images not in over_t:
                    report.missing.append((m.name, n.name, f.images))
    return report


# ============================================================================
# Matrices as endomorphisms of S^n
# ============================================================================


def hom_from_matrix(k: SqMatrix) -> SemimoduleMap:
    """The homomorphism S^m -> S^n, f ↦ f ⋆ k."""
    s = k.semiring
    source = free_semimodule(s, k.n_rows)
    target = free_semimodule(s, k.n_cols)
    return _hom_between(source, target, k)


def _hom_between(
    source: FiniteSemimodule, target: FiniteSemimodule, k: SqMatrix
) -> SemimoduleMap:
    images = tuple(
        target.index(apply_matrix(vector(source, v), k).entries) for v in source.elements
    )
    return SemimoduleMap(source, target, images)


def matrix_from_hom(h: SemimoduleMap, m: int, n: int) -> SqMatrix:
    """
    The matrix k with k(x, y) = h(χ_x)(y).

    Raises:
        SemimoduleError: If h is not a homomorphism S^m -> S^n
    """
    s = h.source.semiring
    if len(h.source) != len(s) ** m or len(h.target) != len(s) ** n:
        raise SemimoduleError(f"expected a map {s.name}^{m} -> {s.name}^{n}")
    problem = h.violation()
    if problem is not None:
        raise SemimoduleError(f"not a homomorphism: {problem}")
    rows = [h(characteristic(s, m, x).entries) for x in range(m)]
    return SqMatrix(s, tuple(tuple(r) for r in rows), n)


@dataclass
class HomSemiringCheck:
    """
    Exhaustive check that k ↦ (f ↦ f ⋆ k) is an isomorphism M_n(S) ≅ End(S^n).

    Composition in End(S^n) is fg := g ∘ f.

    Attributes:
        semiring: S
        n: Dimension
        matrices: |M_n(S)|
        endomorphisms: |End(S^n)| found by enumeration
        problems: Descriptions of every failed clause
    """

    semiring: SemiringTable
    n: int
    matrices: int
    endomorphisms: int
    problems: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.problems


def hom_semiring_check(semiring: SemiringTable, n: int) -> HomSemiringCheck:
    """
    Verify bijectivity, inverse, join, product, zero and unit preservation.

    Raises:
        CapExceeded: If |S|^(n²) exceeds MATRIX_SCAN_MAX
    """
    free = free_semimodule(semiring, n)
    matrices = list(all_matrices(semiring, n))
    homs = {k: _hom_between(free, free, k) for k in matrices}
    ends = enumerate_homs(free, free)
    check = HomSemiringCheck(semiring, n, len(matrices), len(ends))

    tables = {h.images for h in homs.values()}
    if len(tables) != len(matrices):
        check.problems.append("two matrices give the same endomorphism")
    if tables != {h.images for h in ends}:
        check.problems.append("some endomorphism is not given by a matrix")
    for k, h in homs.items():
        if matrix_from_hom(h, n, n) != k:
            check.problems.append(f"matrix_from_hom does not invert hom_from_matrix at {k}")
            break

    if homs[identity_matrix(semiring, n)].images != tuple(range(len(free))):
        check.problems.append("ι does not map to the identity")
    if set(homs[zero_matrix(semiring, n)].images) != {free.zero_index}:
        check.problems.append("o does not map to the zero map")

    join_ok = product_ok = True
    for a in matrices:
        for b in matrices:
            ha, hb = homs[a], homs[b]
            pointwise = tuple(
                free.join_table[x][y] for x, y in zip(ha.images, hb.images, strict=True)
            )
            if join_ok and homs[matrix_join(a, b)].images != pointwise:
                check.problems.append(f"join is not preserved at {a}, {b}")
                join_ok = False
            if product_ok and homs[matrix_star(a, b)].images != ha.then(hb).images:
                check.problems.append(f"⋆ does not map to composition at {a}, {b}")
                product_ok = False
        if not (join_ok or product_ok):
            break
    return check
