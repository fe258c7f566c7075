"""
The direct transform H and its residual Λ.

    H(f)_j = max_i  f_i ⊙ p(i,j)  = max_i max(f_i + p(i,j) - 1, 0)
    Λ(g)_i = min_j  p(i,j) → g_j  = min_j min(1, 1 - p(i,j) + g_j)

H and Λ form a residuated pair, H(f) <= g iff f <= Λ(g), so Λ∘H is a
closure operator and a second compress/reconstruct pass changes nothing.

The *_blocks variants take a (k, m) or (k, n) object array holding k
vectors and transform them together.
"""

from collections.abc import Sequence
from fractions import Fraction

import numpy as np

from .basis import BasisMatrix, CodecError

Vector = tuple[Fraction, ...]


def _as_vector(values: Sequence, length: int, label: str) -> np.ndarray:
    if len(values) != length:
        raise CodecError(f"{label} has length {len(values)}, expected {length}")
    out = np.empty(length, dtype=object)
    for k, v in enumerate(values):
        v = Fraction(v)
        if not 0 <= v <= 1:
            raise CodecError(f"{label}[{k}] = {v} is outside [0,1]")
        out[k] = v
    return out


def _exact(values: np.ndarray) -> Vector:
    return tuple(Fraction(v) for v in values)


def transform_blocks(blocks: np.ndarray, p: BasisMatrix) -> np.ndarray:
    """H applied to every row of a (k, m) object array."""
    if blocks.shape[-1] != p.m:
        raise CodecError(f"blocks have {blocks.shape[-1]} samples, basis expects {p.m}")
    terms = blocks[:, :, None] + p.as_array()[None, :, :] - 1
    return np.maximum(terms, 0).max(axis=1)


def inverse_blocks(coefficients: np.ndarray, p: BasisMatrix) -> np.ndarray:
    """Λ applied to every row of a (k, n) object array."""
    if coefficients.shape[-1] != p.n:
        raise CodecError(f"coefficients have {coefficients.shape[-1]} entries, basis has {p.n}")
    terms = 1 - p.as_array()[None, :, :] + coefficients[:, None, :]
    return np.minimum(terms, 1).min(axis=2)


def transform_H(f: Sequence, p: BasisMatrix) -> Vector:
    """
    Compress one block.

    Raises:
        CodecError: On a length mismatch or a value outside [0,1]
    """
    v = _as_vector(f, p.m, "f")
    return _exact(transform_blocks(v[None, :], p)[0])


def inverse_L(g: Sequence, p: BasisMatrix) -> Vector:
    """
    Reconstruct one block.

    Raises:
        CodecError: On a length mismatch or a value outside [0,1]
    """
    v = _as_vector(g, p.n, "g")
    return _exact(inverse_blocks(v[None, :], p)[0])
