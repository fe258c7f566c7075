"""
The .ltb container.

Layout (little-endian):

    offset  size  field
    0       4     magic "LTB1"
    4       4     width
    8       4     height
    12      4     channels
    16      4     a (block rows)
    20      4     b (block columns)
    24      4     c (coefficient rows)
    28      4     d (coefficient columns)
    32      ...   one byte per coefficient

The payload is channel-planar; inside each channel blocks are stored
row-major and each block holds its c·d coefficients.
"""

import math
import struct
from dataclasses import dataclass
from pathlib import Path


class ContainerError(Exception):
    """Raised for malformed .ltb data."""

    pass


LTB_MAGIC = b"LTB1"
HEADER = struct.Struct("<4s7I")


@dataclass(frozen=True)
class LtbFile:
    """
    A compressed image as stored on disk.

    Attributes:
        width, height: Original image dimensions
        channels: 1 (grey) or 3 (RGB)
        a, b: Block rows and columns
        c, d: Coefficient rows and columns per block
        payload: Quantized coefficients
    """

    width: int
    height: int
    channels: int
    a: int
    b: int
    c: int
    d: int
    payload: bytes

    @property
    def block_grid(self) -> tuple[int, int]:
        """(block rows, block columns) covering the image."""
        return math.ceil(self.height / self.a), math.ceil(self.width / self.b)

    @property
    def expected_payload(self) -> int:
        rows, cols = self.block_grid
        return rows * cols * self.c * self.d * self.channels

    def violation(self) -> str | None:
        if self.width == 0 or self.height == 0:
            return "empty image"
        if self.channels not in (1, 3):
            return f"unsupported channel count {self.channels}"
        if 0 in (self.a, self.b, self.c, self.d):
            return "zero block dimension"
        if self.a * self.b < 2 or self.c * self.d < 2:
            return f"blocks need at least 2 samples, got {self.a}x{self.b} -> {self.c}x{self.d}"
        if self.c * self.d > self.a * self.b:
            return f"target {self.c}x{self.d} is larger than block {self.a}x{self.b}"
        if len(self.payload) != self.expected_payload:
            return f"payload has {len(self.payload)} bytes, header implies {self.expected_payload}"
        return None

    def pack(self) -> bytes:
        """
        Serialize header and payload.

        Raises:
            ContainerError: If the header and payload disagree
        """
        problem = self.violation()
        if problem is not None:
            raise ContainerError(problem)
        fields = (self.width, self.height, self.channels, self.a, self.b, self.c, self.d)
        return HEADER.pack(LTB_MAGIC, *fields) + self.payload

    @classmethod
    def unpack(cls, data: bytes) -> "LtbFile":
        """
        Parse a container.

        Raises:
            ContainerError: On a short header, bad magic or inconsistent payload
        """
        if len(data) < HEADER.size:
            raise ContainerError(f"file too small ({len(data)} bytes) for an .ltb header")
        magic, *fields = HEADER.unpack(data[: HEADER.size])
        if magic != LTB_MAGIC:
            raise ContainerError(f"invalid magic {magic!r} (expected {LTB_MAGIC!r})")
        ltb = cls(*fields, payload=data[HEADER.size :])
        problem = ltb.violation()
        if problem is not None:
            raise ContainerError(problem)
        return ltb

    @classmethod
    def load(cls, path: str | Path) -> "LtbFile":
        """
        Read a container from disk.

        Raises:
            FileNotFoundError: If the file doesn't exist
            ContainerError: If the file is malformed
        """
        return cls.unpack(Path(path).read_bytes())

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(self.pack())
