"""
Codec package.

1. Basis (basis.py): the m x n Łukasiewicz basis matrix.
2. Transform (transform.py): the direct transform H and its residual Λ.
3. Raster (raster.py): exact-valued images and PGM/PPM files.
4. Container (container.py): the .ltb byte format.
5. Pipeline (pipeline.py): block compression, reconstruction and PSNR.
"""

from .basis import BasisMatrix, CodecError, basis_matrix
from .container import HEADER, LTB_MAGIC, ContainerError, LtbFile
from .pipeline import (
    CompressedImage,
    RoundtripReport,
    compress,
    compress_exact,
    compression_ratio,
    decompress,
    join_blocks,
    psnr,
    reconstruct_exact,
    roundtrip,
    split_blocks,
)
from .raster import (
    ImageFormatError,
    Raster,
    encode_pnm,
    parse_pnm,
    quantize,
    random_raster,
    read_pnm,
    to_exact,
    write_pnm,
)
from .transform import inverse_blocks, inverse_L, transform_blocks, transform_H

__all__ = [
    # Basis and transforms
    "BasisMatrix",
    "CodecError",
    "basis_matrix",
    "inverse_L",
    "inverse_blocks",
    "transform_H",
    "transform_blocks",
    # Rasters
    "ImageFormatError",
    "Raster",
    "encode_pnm",
    "parse_pnm",
    "quantize",
    "random_raster",
    "read_pnm",
    "to_exact",
    "write_pnm",
    # Container
    "HEADER",
    "LTB_MAGIC",
    "ContainerError",
    "LtbFile",
    # Pipeline
    "CompressedImage",
    "RoundtripReport",
    "compress",
    "compress_exact",
    "compression_ratio",
    "decompress",
    "join_blocks",
    "psnr",
    "reconstruct_exact",
    "roundtrip",
    "split_blocks",
]
