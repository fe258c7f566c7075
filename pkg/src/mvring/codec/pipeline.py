"""
Block compression pipeline.

An image plane is cut into blocks of a rows by b columns. Each block is
flattened row-major (sample (h, k) goes to position (h-1)·b + k), compressed
by H to c·d coefficients and reconstructed by Λ. Planes whose size is not
a multiple of the block size are padded by repeating the last row and
column; the padding is cropped again on reconstruction.

Two paths share the same block geometry:

    compress_exact / reconstruct_exact   Fractions end to end
    compress / decompress                coefficients quantized into an LtbFile
"""

import math
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from mvring.config import CODEC_MAXVAL

from .basis import BasisMatrix, CodecError, basis_matrix
from .container import LtbFile
from .raster import Raster, quantize, to_exact
from .transform import inverse_blocks, transform_blocks


def compression_ratio(a: int, b: int, c: int, d: int) -> Fraction:
    """ρ = cd / ab."""
    return Fraction(c * d, a * b)


def _check_geometry(a: int, b: int, c: int, d: int) -> BasisMatrix:
    if min(a, b, c, d) < 1:
        raise CodecError(f"block dimensions must be positive, got {a}x{b} -> {c}x{d}")
    if a * b < 2 or c * d < 2:
        raise CodecError(f"blocks need at least 2 samples, got {a}x{b} -> {c}x{d}")
    if c * d > a * b:
        raise CodecError(f"target {c}x{d} is larger than block {a}x{b}")
    return basis_matrix(a * b, c * d)


def _parallel(
    fn: Callable[[np.ndarray, BasisMatrix], np.ndarray],
    rows: np.ndarray,
    p: BasisMatrix,
    threads: int,
) -> np.ndarray:
    # Chunks are contiguous and reassembled in order, so the result does not
    # depend on scheduling.
    if threads <= 1 or len(rows) < 2:
        return fn(rows, p)
    chunks = np.array_split(rows, min(threads, len(rows)))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda chunk: fn(chunk, p), chunks))
    return np.concatenate(parts)


def split_blocks(plane: np.ndarray, a: int, b: int) -> np.ndarray:
    """(H, W) plane -> (blocks, a·b) rows, blocks in row-major order."""
    h, w = plane.shape
    rows, cols = math.ceil(h / a), math.ceil(w / b)
    padded = np.pad(plane, ((0, rows * a - h), (0, cols * b - w)), mode="edge")
    return padded.reshape(rows, a, cols, b).transpose(0, 2, 1, 3).reshape(rows * cols, a * b)


def join_blocks(blocks: np.ndarray, height: int, width: int, a: int, b: int) -> np.ndarray:
    """Inverse of split_blocks, cropped to (height, width)."""
    rows, cols = math.ceil(height / a), math.ceil(width / b)
    plane = blocks.reshape(rows, cols, a, b).transpose(0, 2, 1, 3).reshape(rows * a, cols * b)
    return plane[:height, :width]


@dataclass
class CompressedImage:
    """
    Exact coefficients of every block.

    Attributes:
        width, height, channels: Original raster shape
        a, b, c, d: Block and coefficient geometry
        coefficients: (channels, blocks, c·d) object array of Fractions
    """

    width: int
    height: int
    channels: int
    a: int
    b: int
    c: int
    d: int
    coefficients: np.ndarray

    @property
    def ratio(self) -> Fraction:
        return compression_ratio(self.a, self.b, self.c, self.d)


def compress_exact(
    raster: Raster, a: int, b: int, c: int, d: int, threads: int = 1
) -> CompressedImage:
    """
    Compress every block of every channel with H.

    Raises:
        CodecError: If the geometry is invalid
    """
    p = _check_geometry(a, b, c, d)
    planes = [
        _parallel(transform_blocks, split_blocks(plane, a, b), p, threads)
        for plane in raster.planes
    ]
    return CompressedImage(
        raster.width, raster.height, raster.channels, a, b, c, d, np.stack(planes)
    )


def reconstruct_exact(image: CompressedImage, threads: int = 1, crop: bool = True) -> Raster:
    """
    Apply Λ to every block and reassemble the planes.

    With crop=False the edge padding is kept, so the result covers whole
    blocks and compresses again without re-padding.
    """
    p = _check_geometry(image.a, image.b, image.c, image.d)
    rows, cols = math.ceil(image.height / image.a), math.ceil(image.width / image.b)
    height, width = (image.height, image.width) if crop else (rows * image.a, cols * image.b)
    planes = [
        join_blocks(
            _parallel(inverse_blocks, coefficients, p, threads),
            height,
            width,
            image.a,
            image.b,
        )
        for coefficients in image.coefficients
    ]
    return Raster(np.stack(planes))


def compress(raster: Raster, a: int, b: int, c: int, d: int, threads: int = 1) -> LtbFile:
    """Compress and quantize into a container."""
    image = compress_exact(raster, a, b, c, d, threads)
    payload = quantize(image.coefficients).tobytes()
    return LtbFile(raster.width, raster.height, raster.channels, a, b, c, d, payload)


def decompress(ltb: LtbFile, threads: int = 1) -> Raster:
    """Dequantize a container (q -> q/255) and reconstruct."""
    rows, cols = ltb.block_grid
    levels = np.frombuffer(ltb.payload, dtype=np.uint8).reshape(
        ltb.channels, rows * cols, ltb.c * ltb.d
    )
    image = CompressedImage(
        ltb.width,
        ltb.height,
        ltb.channels,
        ltb.a,
        ltb.b,
        ltb.c,
        ltb.d,
        to_exact(levels, CODEC_MAXVAL),
    )
    return reconstruct_exact(image, threads)


def psnr(x: Raster, y: Raster) -> float:
    """
    10·log10(1/MSE) on the [0,1] scale; inf for identical rasters.

    Raises:
        CodecError: If the shapes differ
    """
    if not x.same_shape(y):
        raise CodecError(f"raster shapes differ: {x.planes.shape} vs {y.planes.shape}")
    diff = x.planes - y.planes
    mse = Fraction(sum(v * v for v in diff.flat)) / diff.size
    if mse == 0:
        return math.inf
    return 10 * math.log10(1 / mse)


# ============================================================================
# Round trips
# ============================================================================


@dataclass
class RoundtripReport:
    """
    One image through both paths.

    Attributes:
        ratio: ρ = cd/ab
        psnr_exact: Original vs exact reconstruction
        psnr_stored: Original vs reconstruction from the quantized container
        container_bytes: Size of the packed .ltb
        second_pass_lossless: Whether compressing the exact reconstruction
            again reproduces it exactly
    """

    ratio: Fraction
    psnr_exact: float
    psnr_stored: float
    container_bytes: int
    second_pass_lossless: bool


def roundtrip(raster: Raster, a: int, b: int, c: int, d: int, threads: int = 1) -> RoundtripReport:
    """
    Compress, reconstruct, and compress the reconstruction once more.

    The second pass runs on the padded reconstruction, so edge blocks keep
    the samples the first pass produced for them.
    """
    padded = reconstruct_exact(compress_exact(raster, a, b, c, d, threads), threads, crop=False)
    second = reconstruct_exact(compress_exact(padded, a, b, c, d, threads), threads, crop=False)
    first = Raster(padded.planes[:, : raster.height, : raster.width])
    ltb = compress(raster, a, b, c, d, threads)
    return RoundtripReport(
        ratio=compression_ratio(a, b, c, d),
        psnr_exact=psnr(raster, first),
        psnr_stored=psnr(raster, decompress(ltb, threads)),
        container_bytes=len(ltb.pack()),
        second_pass_lossless=padded == second,
    )
