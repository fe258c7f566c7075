"""
Matrices and vectors over a finite semiring.

Vectors are rows: a matrix k with m rows and n columns acts on S^m by

    (f k)(y) = ⋁_x f(x) · k(x, y)

so hom_from_matrix(A ⋆ B) is "first A, then B". With the composition
convention fg := g ∘ f this makes matrix ↦ hom a semiring map
M_n(S) -> End(S^n), which hom_semiring_check verifies exhaustively.

Matrices are immutable and ordered lexicographically by the semiring's
canonical element order (row-major), which fixes class representatives in
the K0 enumeration.
"""

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from mvring.algebra import Value
from mvring.config import MATRIX_SCAN_MAX, check_cap
from mvring.formatting import format_value
from mvring.semiring import SemiringTable


class SemimoduleError(Exception):
    """Raised for invalid matrices, semimodules and semimodule maps."""

    pass


@dataclass(frozen=True)
class FreeVector:
    """
    An element of the free semimodule S^n.

    Attributes:
        semiring: The ambient semiring
        entries: One carrier value per coordinate
    """

    semiring: SemiringTable
    entries: tuple[Value, ...]

    def __post_init__(self):
        for v in self.entries:
            if v not in self.semiring:
                raise SemimoduleError(f"{format_value(v)} is not in {self.semiring.name}")

    def __len__(self) -> int:
        return len(self.entries)

    def support(self) -> tuple[int, ...]:
        """Indices of nonzero coordinates."""
        zero = self.semiring.zero
        return tuple(i for i, v in enumerate(self.entries) if v != zero)

    def join(self, other: "FreeVector") -> "FreeVector":
        s = self.semiring
        pairs = zip(self.entries, other.entries, strict=True)
        return FreeVector(s, tuple(s.join(a, b) for a, b in pairs))

    def scale(self, a: Value) -> "FreeVector":
        s = self.semiring
        return FreeVector(s, tuple(s.mul(a, v) for v in self.entries))

    def __str__(self) -> str:
        return "(" + ", ".join(format_value(v) for v in self.entries) + ")"


def characteristic(semiring: SemiringTable, n: int, x: int) -> FreeVector:
    """χ_x: 1 at coordinate x, 0 elsewhere."""
    return FreeVector(
        semiring, tuple(semiring.one if i == x else semiring.zero for i in range(n))
    )


@dataclass(frozen=True)
class SqMatrix:
    """
    A matrix over a finite semiring (square unless used as a hom matrix).

    Attributes:
        semiring: The ambient semiring
        rows: Row-major entries
        n_cols: Number of columns (needed for matrices with no rows)
    """

    semiring: SemiringTable
    rows: tuple[tuple[Value, ...], ...]
    n_cols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.n_cols:
                raise SemimoduleError("matrix rows must all have the same length")
            for v in row:
                if v not in self.semiring:
                    raise SemimoduleError(f"{format_value(v)} is not in {self.semiring.name}")

    @classmethod
    def of(cls, semiring: SemiringTable, rows: Sequence[Sequence[Value]]) -> "SqMatrix":
        rows = tuple(tuple(r) for r in rows)
        return cls(semiring, rows, len(rows[0]) if rows else 0)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    @property
    def dim(self) -> int:
        """Dimension of a square matrix."""
        if not self.is_square:
            raise SemimoduleError(f"{self.n_rows}x{self.n_cols} matrix is not square")
        return self.n_rows

    def __getitem__(self, ij: tuple[int, int]) -> Value:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> FreeVector:
        return FreeVector(self.semiring, self.rows[i])

    def sort_key(self) -> tuple[int, ...]:
        """Row-major tuple of canonical indices, for lexicographic order."""
        s = self.semiring
        return tuple(s.index(v) for row in self.rows for v in row)

    def map_entries(self, fn, target: SemiringTable) -> "SqMatrix":
        """Apply fn entrywise, landing in target."""
        return SqMatrix(target, tuple(tuple(fn(v) for v in row) for row in self.rows), self.n_cols)

    def format(self, decimal: bool = False) -> str:
        """Compact one-line rendering, e.g. [[1,0],[1/2,1]]."""
        return (
            "["
            + ",".join("[" + ",".join(format_value(v, decimal) for v in r) + "]" for r in self.rows)
            + "]"
        )

    def __str__(self) -> str:
        return self.format()


def identity_matrix(semiring: SemiringTable, n: int) -> SqMatrix:
    """ι: 1 on the diagonal, 0 elsewhere."""
    s = semiring
    rows = tuple(tuple(s.one if i == j else s.zero for j in range(n)) for i in range(n))
    return SqMatrix(s, rows, n)


def zero_matrix(semiring: SemiringTable, m: int, n: int | None = None) -> SqMatrix:
    """o: the all-zero matrix (m x n, square by default)."""
    n = m if n is None else n
    return SqMatrix(semiring, tuple((semiring.zero,) * n for _ in range(m)), n)


def matrix_star(a: SqMatrix, b: SqMatrix) -> SqMatrix:
    """
    The product (a ⋆ b)(i, j) = ⋁_k a(i, k) · b(k, j).

    Raises:
        SemimoduleError: On mismatched semirings or dimensions
    """
    if a.semiring is not b.semiring and not a.semiring.same_tables(b.semiring):
        raise SemimoduleError("matrices are over different semirings")
    if a.n_cols != b.n_rows:
        raise SemimoduleError(
            f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}"
        )
    s = a.semiring
    rows = tuple(
        tuple(
            s.join_all([s.mul(a.rows[i][k], b.rows[k][j]) for k in range(a.n_cols)])
            for j in range(b.n_cols)
        )
        for i in range(a.n_rows)
    )
    return SqMatrix(s, rows, b.n_cols)


def matrix_join(a: SqMatrix, b: SqMatrix) -> SqMatrix:
    """Entrywise join."""
    if (a.n_rows, a.n_cols) != (b.n_rows, b.n_cols):
        raise SemimoduleError("cannot join matrices of different shapes")
    s = a.semiring
    rows = tuple(
        tuple(s.join(x, y) for x, y in zip(ra, rb, strict=True))
        for ra, rb in zip(a.rows, b.rows, strict=True)
    )
    return SqMatrix(s, rows, a.n_cols)


def is_idempotent(u: SqMatrix) -> bool:
    """Whether u ⋆ u = u."""
    return u.is_square and matrix_star(u, u) == u


def apply_matrix(v: FreeVector, k: SqMatrix) -> FreeVector:
    """
    The row vector v ⋆ k, i.e. y ↦ ⋁_x v(x) · k(x, y).

    Raises:
        SemimoduleError: If len(v) differs from the number of rows of k
    """
    if len(v) != k.n_rows:
        raise SemimoduleError(f"vector of length {len(v)} cannot meet a {k.n_rows}-row matrix")
    s = k.semiring
    return FreeVector(
        s,
        tuple(
            s.join_all([s.mul(v.entries[i], k.rows[i][j]) for i in range(k.n_rows)])
            for j in range(k.n_cols)
        ),
    )


def all_matrices(semiring: SemiringTable, n: int) -> Iterator[SqMatrix]:
    """
    Every n x n matrix in lexicographic order.

    Raises:
        CapExceeded: If |S|^(n²) exceeds MATRIX_SCAN_MAX
    """
    check_cap("MATRIX_SCAN_MAX", len(semiring) ** (n * n), MATRIX_SCAN_MAX)
    for flat in itertools.product(semiring.elements, repeat=n * n):
        yield SqMatrix(semiring, tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n)), n)


def idempotent_scan(semiring: SemiringTable, n: int) -> list[SqMatrix]:
    """All idempotent n x n matrices, in lexicographic order."""
    return [u for u in all_matrices(semiring, n) if is_idempotent(u)]
