"""
The Łukasiewicz basis matrix p(i, j).

Rows are indexed by the m samples of a block, columns by the n
coefficients it is compressed to. With t = (n-1)(i-1)/(m-1):

    p(i, j) = t - (j-2)   if j-2 <= t <= j-1
              j - t       if j-1 <= t <= j
              0           otherwise

so every column is a hat function peaking at one of n equally spaced
nodes, and every row sums to 1.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from mvring.config import BASIS_MAX_SIZE, check_cap


class CodecError(Exception):
    """Raised for invalid basis sizes, block geometries and vectors."""

    pass


@dataclass(frozen=True)
class BasisMatrix:
    """
    An m x n basis matrix with exact entries.

    Attributes:
        m: Samples per block
        n: Coefficients per block
        entries: m rows of n Fractions
    """

    m: int
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        """p(i, j) with 1-based indices."""
        i, j = ij
        return self.entries[i - 1][j - 1]

    def as_array(self) -> np.ndarray:
        """The entries as an (m, n) object array of Fractions."""
        out = np.empty((self.m, self.n), dtype=object)
        for i, row in enumerate(self.entries):
            out[i, :] = row
        return out

    def violation(self) -> str | None:
        """First broken invariant: branch agreement, range, row sums, or None."""
        for i, row in enumerate(self.entries, start=1):
            t = _node_position(self.m, self.n, i)
            for j, v in enumerate(row, start=1):
                branches = _branches(t, j)
                if len(set(branches)) > 1:
                    return f"p({i},{j}) branches disagree: {branches}"
                if v != (branches[0] if branches else 0):
                    return f"p({i},{j}) = {v} does not match its formula"
                if not 0 <= v <= 1:
                    return f"p({i},{j}) = {v} is outside [0,1]"
            if sum(row) != 1:
                return f"row {i} sums to {sum(row)}"
        return None


def _node_position(m: int, n: int, i: int) -> Fraction:
    return Fraction((n - 1) * (i - 1), m - 1)


def _branches(t: Fraction, j: int) -> list[Fraction]:
    """Values of every piece of p(i, j) whose range contains t; both apply at t = j-1."""
    values = []
    if j - 2 <= t <= j - 1:
        values.append(t - (j - 2))
    if j - 1 <= t <= j:
        values.append(j - t)
    return values


def _entry(t: Fraction, j: int) -> Fraction:
    branches = _branches(t, j)
    return branches[0] if branches else Fraction(0)


def basis_matrix(m: int, n: int) -> BasisMatrix:
    """
    Build p for m samples and n coefficients.

    Raises:
        CodecError: If m < 2, n < 2 or n > m
        CapExceeded: If m > BASIS_MAX_SIZE
    """
    if m < 2 or n < 2:
        raise CodecError(f"basis needs m >= 2 and n >= 2, got m={m}, n={n}")
    if n > m:
        raise CodecError(f"n={n} > m={m} does not compress")
    check_cap("BASIS_MAX_SIZE", m, BASIS_MAX_SIZE)
    rows = []
    for i in range(1, m + 1):
        t = _node_position(m, n, i)
        rows.append(tuple(_entry(t, j) for j in range(1, n + 1)))
    return BasisMatrix(m, n, tuple(rows))
