"""
Enumeration caps, defaults and run-wide options.

Most of what this package does is exhaustive search over small finite
structures: all unary maps on a semiring, all matrices of a given size, all
subsets of a product set. Each of those searches is guarded by one of the
caps below, so a request that would run for hours fails fast with
CapExceeded instead.

The CLI builds a single RunConfig from its global flags and hands it to the
commands; library functions take plain keyword arguments whose defaults
come from this module.
"""

from dataclasses import dataclass

# ============================================================================
# Search Caps
# ============================================================================
# Each cap bounds the number of candidates an exhaustive search may visit
# (or the size of the structure it may enumerate over).

# MV-semiring recognition enumerates unary maps S -> S.
RECOGNITION_MAX_SIZE = 6

# Tautology checks visit (k+1)^v assignments.
TAUTOLOGY_MAX_ASSIGNMENTS = 10**7

# Tensor products work on the powerset of M x N.
TENSOR_MAX_PAIRS = 16

# Retract search over pairs of semimodule maps S^n -> M -> S^n.
PROJECTIVE_MAX_CANDIDATES = 10**6

# Matrices visited per dimension when enumerating idempotents.
MATRIX_SCAN_MAX = 20_000

# Brute-force congruence enumeration on finite MV-algebras.
CONGRUENCE_MAX_SIZE = 16

# Semimodule hom-set enumeration (images of generators).
HOM_MAX_CANDIDATES = 10**6

# Endomorphism enumeration for the action-image strongness cross-check.
STRONG_CROSSCHECK_MAX_SIZE = 3


# ============================================================================
# Defaults
# ============================================================================

# The unit interval is law-checked on the grid {0, 1/q, ..., 1}.
UNIT_INTERVAL_GRID = 10

# Codec quantization: coefficients are stored as round(255 * v).
CODEC_MAXVAL = 255

# Largest block size (a*b) accepted by the codec.
BASIS_MAX_SIZE = 4096

# Decimal places used by --decimal rendering.
DECIMAL_PLACES = 4


class CapExceeded(Exception):
    """
    Raised when an exhaustive search would exceed its configured cap.

    Attributes:
        cap: Name of the cap (e.g. "RECOGNITION_MAX_SIZE")
        requested: Size the caller asked for
        limit: The configured limit
    """

    def __init__(self, cap: str, requested: int, limit: int):
        self.cap = cap
        self.requested = requested
        self.limit = limit
        super().__init__(f"{cap} exceeded: requested {requested}, limit is {limit}")


def check_cap(cap: str, requested: int, limit: int) -> None:
    """
    Raise CapExceeded if requested is above limit.

    Args:
        cap: Name of the cap, used in the error message
        requested: Number of candidates the caller wants to visit
        limit: The configured limit
    """
    if requested > limit:
        raise CapExceeded(cap, requested, limit)


@dataclass(frozen=True)
class RunConfig:
    """
    Options shared by every CLI command.

    Attributes:
        decimal: Render numbers as decimals instead of exact fractions
        threads: Worker threads for parallel block and candidate scans
        seed: Seed for random property trials and random rasters
        verbose: Print progress lines to stderr
    """

    decimal: bool = False
    threads: int = 1
    seed: int = 0
    verbose: bool = False
