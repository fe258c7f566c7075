"""
Finitely generated projective semimodules, up to isomorphism.

A finitely generated S-semimodule is projective exactly when it is
isomorphic to the row semimodule of an idempotent matrix. The catalog
below scans idempotent matrices by dimension, groups their row semimodules
into isomorphism classes and remembers the least representative of each:
smallest dimension first, then the lexicographically least matrix.

The zero class is represented by the 1x1 zero matrix. direct_sum also
accepts the 0x0 matrix as an identity block.
"""

from collections.abc import Callable
from dataclasses import dataclass, field

from mvring.semimodule import (
    FiniteSemimodule,
    SqMatrix,
    brute_force_projective,
    find_isomorphism,
    free_semimodule,
    idempotent_scan,
    is_idempotent,
    row_semimodule,
    zero_matrix,
)
from mvring.semiring import SemiringTable


class KTheoryError(Exception):
    """Raised for invalid projective presentations and K0 operations."""

    pass


def projective_presentation(u: SqMatrix) -> FiniteSemimodule:
    """
    The row semimodule S·{u_i} of an idempotent matrix.

    Raises:
        KTheoryError: If u is not idempotent
    """
    if not is_idempotent(u):
        raise KTheoryError(f"{u} is not idempotent")
    return row_semimodule(u)


def direct_sum(u: SqMatrix, v: SqMatrix) -> SqMatrix:
    """
    The block-diagonal matrix [[u, o], [o, v]].

    Raises:
        KTheoryError: If the matrices are not square or live over different semirings
    """
    if not (u.is_square and v.is_square):
        raise KTheoryError("direct sums take square matrices")
    if not u.semiring.same_tables(v.semiring):
        raise KTheoryError("matrices are over different semirings")
    s = u.semiring
    m, n = u.n_rows, v.n_rows
    rows = [tuple(r) + (s.zero,) * n for r in u.rows]
    rows += [(s.zero,) * m + tuple(r) for r in v.rows]
    return SqMatrix(u.semiring, tuple(rows), m + n)


def pad(u: SqMatrix, k: int) -> SqMatrix:
    """u ⊕ o_k: append k zero rows and columns."""
    if k == 0:
        return u
    return direct_sum(u, zero_matrix(u.semiring, k))


@dataclass(frozen=True)
class ProjClass:
    """
    An isomorphism class of finitely generated projective semimodules.

    Attributes:
        class_id: Position in the catalog (the zero class is 0)
        representative: Least idempotent matrix presenting the class
        module: Row semimodule of the representative
    """

    class_id: int
    representative: SqMatrix
    module: FiniteSemimodule = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.representative.dim

    def __str__(self) -> str:
        return f"P{self.class_id}"


@dataclass
class ProjectiveCatalog:
    """
    Every projective class presented by idempotent matrices up to max_dim.

    Attributes:
        semiring: S
        max_dim: Largest matrix dimension scanned
        classes: Classes in catalog order
        scanned: Number of idempotent matrices classified
    """

    semiring: SemiringTable
    max_dim: int
    classes: list[ProjClass] = field(default_factory=list)
    scanned: int = 0

    def find(self, module: FiniteSemimodule) -> ProjClass | None:
        """The catalog class isomorphic to module, or None."""
        for c in self.classes:
            if len(c.module) == len(module) and find_isomorphism(c.module, module) is not None:
                return c
        return None

    def classify(self, u: SqMatrix) -> ProjClass | None:
        """The class of an idempotent matrix, or None if it is not catalogued."""
        return self.find(projective_presentation(u))

    @property
    def zero(self) -> ProjClass:
        return self.classes[0]

    def sum(self, p: ProjClass, q: ProjClass) -> ProjClass | None:
        """[P] ⊕ [Q], or None when the sum falls outside the catalog."""
        return self.classify(direct_sum(p.representative, q.representative))

    def sum_table(self) -> list[list[ProjClass | None]]:
        return [[self.sum(p, q) for q in self.classes] for p in self.classes]


def enumerate_projectives(
    semiring: SemiringTable,
    max_dim: int,
    progress: Callable[[str], None] | None = None,
) -> ProjectiveCatalog:
    """
    Classify every idempotent matrix of dimension 1..max_dim.

    Args:
        semiring: S
        max_dim: Largest dimension to scan (at least 1)
        progress: Optional callback receiving one line per dimension

    Raises:
        KTheoryError: If max_dim < 1
        CapExceeded: If a dimension has more than MATRIX_SCAN_MAX matrices
    """
    if max_dim < 1:
        raise KTheoryError(f"max_dim must be at least 1, got {max_dim}")
    catalog = ProjectiveCatalog(semiring, max_dim)
    zero = zero_matrix(semiring, 1)
    catalog.classes.append(ProjClass(0, zero, row_semimodule(zero)))
    for n in range(1, max_dim + 1):
        idempotents = idempotent_scan(semiring, n)
        for u in idempotents:
            catalog.scanned += 1
            module = row_semimodule(u)
            if catalog.find(module) is None:
                catalog.classes.append(ProjClass(len(catalog.classes), u, module))
        message = (
            f"dim {n}: {len(idempotents)} idempotent matrices, "
            f"{len(catalog.classes)} classes so far"
        )
        if progress is not None:
            progress(message)
    return catalog


# ============================================================================
# Checks
# ============================================================================


def padding_invariant(u: SqMatrix, k: int) -> bool:
    """Whether padding u with k zero rows and columns preserves its class."""
    return (
        find_isomorphism(projective_presentation(u), projective_presentation(pad(u, k)))
        is not None
    )


@dataclass
class MutualExpressibility:
    """
    Row-space expressibility versus isomorphism for two idempotent matrices.

    Attributes:
        u, v: The matrices compared
        expressible: Whether every row of each lies in the row space of the
            other (None when their widths differ)
        isomorphic: Whether the row semimodules are isomorphic
    """

    u: SqMatrix
    v: SqMatrix
    expressible: bool | None
    isomorphic: bool

    @property
    def sound(self) -> bool:
        """Expressibility never claims more than isomorphism."""
        return not self.expressible or self.isomorphic

    @property
    def coincides(self) -> bool:
        return bool(self.expressible) == self.isomorphic


def mutual_expressibility(u: SqMatrix, v: SqMatrix) -> MutualExpressibility:
    """Compare the row-space criterion with the isomorphism oracle."""
    mu, mv = projective_presentation(u), projective_presentation(v)
    expressible = None
    if u.n_cols == v.n_cols:
        expressible = all(r in mv for r in u.rows) and all(r in mu for r in v.rows)
    return MutualExpressibility(u, v, expressible, find_isomorphism(mu, mv) is not None)


@dataclass
class ProjectivityAgreement:
    """
    Retract oracle versus the idempotent-matrix criterion on one module.

    Attributes:
        module: The module tested
        n: Rank of the free module
        by_retract: brute_force_projective's answer
        witness: An idempotent n x n matrix whose row semimodule is
            isomorphic to the module, if any
    """

    module: FiniteSemimodule
    n: int
    by_retract: bool
    witness: SqMatrix | None

    @property
    def by_matrix(self) -> bool:
        return self.witness is not None

    @property
    def agrees(self) -> bool:
        return self.by_retract == self.by_matrix


def projectivity_agreement(module: FiniteSemimodule, n: int) -> ProjectivityAgreement:
    """Decide projectivity of module (rank n) both ways."""
    oracle = brute_force_projective(module, n)
    witness = None
    for u in idempotent_scan(module.semiring, n):
        presented = row_semimodule(u)
        if len(presented) == len(module) and find_isomorphism(presented, module) is not None:
            witness = u
            break
    return ProjectivityAgreement(module, n, oracle.projective, witness)


def submodules_of_free(semiring: SemiringTable, n: int) -> list[FiniteSemimodule]:
    """Every sub-semimodule of S^n, each listed once, smallest first."""
    free = free_semimodule(semiring, n)
    found: dict[frozenset, None] = {}
    frontier = [free.closure([])]
    found[frontier[0]] = None
    while frontier:
        nxt = []
        for carrier in frontier:
            for x in free.elements:
                grown = free.closure([free.elements[i] for i in carrier] + [x])
                if grown not in found:
                    found[grown] = None
                    nxt.append(grown)
        frontier = nxt
    carriers = sorted(found, key=lambda c: (len(c), sorted(c)))
    return [free.restrict(sorted(c), f"sub{i}({free.name})") for i, c in enumerate(carriers)]
