"""
Rasters with exact [0,1] values, and PNM input/output.

A raster stores one plane per channel as an object array of Fractions,
0 = black and 1 = white. PGM (P2/P5) files give one channel, PPM (P3/P6)
three. On read, samples are rescaled exactly by the file's maxval; on
write, values are quantized to maxval 255 with rounding half up.
"""

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from mvring.config import CODEC_MAXVAL


class ImageFormatError(Exception):
    """Raised for malformed or unsupported PNM data."""

    pass


# Magic -> (channels, binary)
PNM_FORMATS = {
    b"P2": (1, False),
    b"P3": (3, False),
    b"P5": (1, True),
    b"P6": (3, True),
}


def to_exact(levels: np.ndarray, maxval: int) -> np.ndarray:
    """Integer samples -> object array of Fractions v/maxval."""
    out = np.empty(levels.shape, dtype=object)
    for idx, v in np.ndenumerate(levels):
        out[idx] = Fraction(int(v), maxval)
    return out


def quantize(values: np.ndarray, maxval: int = CODEC_MAXVAL) -> np.ndarray:
    """Exact values -> uint8 levels, q = ⌊maxval·v + 1/2⌋."""
    out = np.empty(values.shape, dtype=np.uint8)
    for idx, v in np.ndenumerate(values):
        out[idx] = int(Fraction(v) * maxval + Fraction(1, 2))
    return out


@dataclass
class Raster:
    """
    An image of exact values in [0,1].

    Attributes:
        planes: (channels, height, width) object array of Fractions
        maxval: Sample depth of the source file
    """

    planes: np.ndarray
    maxval: int = CODEC_MAXVAL

    @property
    def channels(self) -> int:
        return self.planes.shape[0]

    @property
    def height(self) -> int:
        return self.planes.shape[1]

    @property
    def width(self) -> int:
        return self.planes.shape[2]

    @classmethod
    def from_levels(cls, levels: np.ndarray, maxval: int = CODEC_MAXVAL) -> "Raster":
        """
        Build from integer samples shaped (height, width) or (channels, height, width).

        Raises:
            ImageFormatError: If the shape is wrong or a sample exceeds maxval
        """
        if levels.ndim == 2:
            levels = levels[None, :, :]
        if levels.ndim != 3 or levels.shape[0] not in (1, 3) or 0 in levels.shape:
            raise ImageFormatError(f"unsupported raster shape {levels.shape}")
        if levels.min() < 0 or levels.max() > maxval:
            raise ImageFormatError(f"samples must lie in 0..{maxval}")
        return cls(to_exact(levels, maxval), maxval)

    def levels(self) -> np.ndarray:
        """Quantized uint8 planes, shape (channels, height, width)."""
        return quantize(self.planes)

    def same_shape(self, other: "Raster") -> bool:
        return self.planes.shape == other.planes.shape

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Raster):
            return NotImplemented
        return self.same_shape(other) and bool(np.all(self.planes == other.planes))


def _header_tokens(data: bytes) -> tuple[list[bytes], int]:
    """The first four header tokens and the offset just past the last one."""
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < 4:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise ImageFormatError("truncated PNM header")
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def parse_pnm(data: bytes) -> Raster:
    """
    Decode PGM/PPM bytes.

    Raises:
        ImageFormatError: For an unknown magic, bad header, maxval > 255 or
            short sample data
    """
    tokens, pos = _header_tokens(data)
    magic = tokens[0]
    if magic not in PNM_FORMATS:
        raise ImageFormatError(f"unsupported PNM magic {magic!r}")
    channels, binary = PNM_FORMATS[magic]
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise ImageFormatError(f"bad PNM header {b' '.join(tokens)!r}") from None
    if width <= 0 or height <= 0:
        raise ImageFormatError(f"bad PNM dimensions {width}x{height}")
    if not 0 < maxval <= CODEC_MAXVAL:
        raise ImageFormatError(f"maxval {maxval} not supported (1..{CODEC_MAXVAL})")

    count = width * height * channels
    if binary:
        # Exactly one whitespace byte separates the header from the samples.
        body = data[pos + 1 : pos + 1 + count]
        if len(body) != count:
            raise ImageFormatError(f"expected {count} samples, found {len(body)}")
        samples = np.frombuffer(body, dtype=np.uint8).astype(np.int64)
    else:
        try:
            samples = np.array([int(t) for t in data[pos:].split()[:count]], dtype=np.int64)
        except ValueError:
            raise ImageFormatError("non-numeric sample in ASCII PNM") from None
        if samples.size != count:
            raise ImageFormatError(f"expected {count} samples, found {samples.size}")

    # Samples are interleaved per pixel; planes are channel-major.
    levels = samples.reshape(height, width, channels).transpose(2, 0, 1)
    return Raster.from_levels(levels, maxval)


def read_pnm(path: str | Path) -> Raster:
    """
    Load a PGM or PPM file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        ImageFormatError: If the file is not a supported PNM
    """
    return parse_pnm(Path(path).read_bytes())


def encode_pnm(raster: Raster, binary: bool = True) -> bytes:
    """Encode as P5/P6 (binary) or P2/P3 (ASCII) with maxval 255."""
    if raster.channels == 1:
        magic = b"P5" if binary else b"P2"
    else:
        magic = b"P6" if binary else b"P3"
    header = magic + f"\n{raster.width} {raster.height}\n{CODEC_MAXVAL}\n".encode("ascii")
    pixels = raster.levels().transpose(1, 2, 0).reshape(-1)
    if binary:
        return header + pixels.tobytes()
    rows = pixels.reshape(raster.height, raster.width * raster.channels)
    return header + b"".join(b" ".join(b"%d" % int(v) for v in row) + b"\n" for row in rows)


def write_pnm(raster: Raster, path: str | Path, binary: bool = True) -> None:
    Path(path).write_bytes(encode_pnm(raster, binary))


def random_raster(
    width: int, height: int, channels: int = 1, seed: int = 0, levels: int = CODEC_MAXVAL
) -> Raster:
    """A seeded raster whose samples are multiples of 1/levels."""
    rng = np.random.default_rng(seed)
    samples = rng.integers(0, levels, size=(channels, height, width), endpoint=True)
    return Raster.from_levels(samples, levels)
