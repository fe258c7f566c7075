import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvring.codec import (
    HEADER,
    BasisMatrix,
    CodecError,
    ContainerError,
    ImageFormatError,
    LtbFile,
    Raster,
    basis_matrix,
    compress,
    compress_exact,
    compression_ratio,
    decompress,
    encode_pnm,
    inverse_L,
    join_blocks,
    parse_pnm,
    psnr,
    quantize,
    random_raster,
    read_pnm,
    reconstruct_exact,
    roundtrip,
    split_blocks,
    transform_H,
    write_pnm,
)
from mvring.config import CapExceeded

HALF = Fraction(1, 2)


def flat(levels: list[list[int]], maxval: int = 255) -> Raster:
    return Raster.from_levels(np.array(levels, dtype=np.int64), maxval)


# ============================================================================
# Basis and transforms
# ============================================================================


def test_basis_for_five_samples_and_three_coefficients() -> None:
    p = basis_matrix(5, 3)
    assert p.entries == (
        (1, 0, 0),
        (HALF, HALF, 0),
        (0, 1, 0),
        (0, HALF, HALF),
        (0, 0, 1),
    )
    assert p[2, 1] == HALF
    assert p.as_array().shape == (5, 3)


@pytest.mark.parametrize("m", range(2, 65))
def test_basis_invariants_for_every_size(m: int) -> None:
    for n in range(2, m + 1):
        p = basis_matrix(m, n)
        assert p.violation() is None, (m, n)
        assert p.entries[0][0] == 1
        assert p.entries[-1][-1] == 1


def test_basis_violation_spots_a_misplaced_row() -> None:
    p = basis_matrix(5, 3)
    rows = p.entries
    swapped = BasisMatrix(5, 3, (rows[1], rows[0], *rows[2:]))
    assert "does not match" in swapped.violation()


@pytest.mark.parametrize(("m", "n"), [(1, 1), (5, 1), (3, 4)])
def test_basis_rejects_bad_sizes(m: int, n: int) -> None:
    with pytest.raises(CodecError):
        basis_matrix(m, n)


def test_basis_is_capped() -> None:
    with pytest.raises(CapExceeded) as excinfo:
        basis_matrix(5000, 2)
    assert excinfo.value.cap == "BASIS_MAX_SIZE"


def test_transform_of_a_constant_block() -> None:
    p = basis_matrix(5, 3)
    g = transform_H([HALF] * 5, p)
    assert g == (HALF, HALF, HALF)
    assert inverse_L(g, p) == (HALF, 1, HALF, 1, HALF)


def test_black_is_not_a_fixed_point_but_white_is() -> None:
    p = basis_matrix(5, 3)
    black = inverse_L(transform_H([0] * 5, p), p)
    assert black == (0, HALF, 0, HALF, 0)
    assert inverse_L(transform_H(black, p), p) == black
    assert inverse_L(transform_H([1] * 5, p), p) == (1,) * 5


def test_transform_rejects_bad_vectors() -> None:
    p = basis_matrix(5, 3)
    with pytest.raises(CodecError, match="length"):
        transform_H([0] * 4, p)
    with pytest.raises(CodecError, match="outside"):
        transform_H([0, 0, 2, 0, 0], p)
    with pytest.raises(CodecError):
        inverse_L([Fraction(-1, 2), 0, 0], p)


def unit_vectors(length: int) -> st.SearchStrategy[list[Fraction]]:
    value = st.fractions(min_value=0, max_value=1, max_denominator=255)
    return st.lists(value, min_size=length, max_size=length)


@pytest.mark.parametrize(("m", "n"), [(5, 3), (16, 4), (64, 16)])
def test_transforms_are_residuated(m: int, n: int) -> None:
    p = basis_matrix(m, n)

    @settings(max_examples=1000, deadline=None)
    @given(unit_vectors(m), unit_vectors(n))
    def check(f: list[Fraction], g: list[Fraction]) -> None:
        h = transform_H(f, p)
        lam = inverse_L(g, p)
        assert all(x <= y for x, y in zip(h, g, strict=True)) == all(
            x <= y for x, y in zip(f, lam, strict=True)
        )
        closed = inverse_L(h, p)
        assert all(x <= y for x, y in zip(f, closed, strict=True))
        assert all(x <= y for x, y in zip(transform_H(lam, p), g, strict=True))
        assert transform_H(closed, p) == h

    check()


# ============================================================================
# Rasters and PNM
# ============================================================================


def test_quantize_rounds_half_up() -> None:
    values = np.array([Fraction(0), HALF, Fraction(1, 510), Fraction(1)], dtype=object)
    assert quantize(values).tolist() == [0, 128, 1, 255]


def test_parse_ascii_pgm_with_comment() -> None:
    r = parse_pnm(b"P2\n# made by hand\n2 1\n4\n0 4\n")
    assert (r.channels, r.height, r.width, r.maxval) == (1, 1, 2, 4)
    assert r.planes[0, 0, :].tolist() == [0, 1]
    assert encode_pnm(r) == b"P5\n2 1\n255\n\x00\xff"
    assert encode_pnm(r, binary=False) == b"P2\n2 1\n255\n0 255\n"


def test_parse_ascii_ppm_splits_channels() -> None:
    r = parse_pnm(b"P3\n2 1\n255\n255 0 0 0 0 255\n")
    assert r.planes.shape == (3, 1, 2)
    assert r.planes[0, 0, :].tolist() == [1, 0]
    assert r.planes[2, 0, :].tolist() == [0, 1]


@pytest.mark.parametrize(
    ("data", "match"),
    [
        (b"P7\n1 1\n255\n\x00", "magic"),
        (b"P2\n1 1\n", "truncated"),
        (b"P2\n1 1\n256\n0\n", "maxval"),
        (b"P2\n0 1\n255\n", "dimensions"),
        (b"P2\nx 1\n255\n0\n", "header"),
        (b"P5\n2 1\n255\n\x00", "expected 2 samples"),
        (b"P2\n2 1\n255\n0 z\n", "non-numeric"),
        (b"P2\n1 1\n4\n5\n", "samples must lie"),
    ],
)
def test_parse_errors(data: bytes, match: str) -> None:
    with pytest.raises(ImageFormatError, match=match):
        parse_pnm(data)


def test_pnm_file_round_trip(tmp_path) -> None:
    r = random_raster(3, 2, channels=3, seed=1)
    path = tmp_path / "rgb.ppm"
    write_pnm(r, path)
    assert path.read_bytes().startswith(b"P6\n3 2\n255\n")
    assert read_pnm(path) == r


def test_random_raster_is_seeded() -> None:
    assert random_raster(4, 4, seed=7) == random_raster(4, 4, seed=7)
    assert random_raster(4, 4, levels=1, seed=7).maxval == 1


# ============================================================================
# Blocks and containers
# ============================================================================


def test_blocks_are_row_major_and_padded_by_replication() -> None:
    plane = np.arange(15).reshape(3, 5)
    blocks = split_blocks(plane, 2, 2)
    assert blocks.shape == (6, 4)
    assert blocks[0].tolist() == [0, 1, 5, 6]
    # Last column and last row are repeated into the padding.
    assert blocks[2].tolist() == [4, 4, 9, 9]
    assert blocks[5].tolist() == [14, 14, 14, 14]
    assert (join_blocks(blocks, 3, 5, 2, 2) == plane).all()


def test_container_round_trip() -> None:
    ltb = compress(random_raster(16, 16, seed=3), 4, 4, 2, 2)
    data = ltb.pack()
    assert data[:4] == b"LTB1"
    assert len(data) == HEADER.size + 16 * 4
    assert LtbFile.unpack(data) == ltb


def test_container_file_round_trip(tmp_path) -> None:
    ltb = compress(random_raster(6, 4, seed=9), 2, 2, 1, 2)
    path = tmp_path / "small.ltb"
    ltb.save(path)
    assert LtbFile.load(path) == ltb


@pytest.mark.parametrize(
    ("data", "match"),
    [
        (b"LTB1", "file too small"),
        (b"XXXX" + bytes(28), "invalid magic"),
        (HEADER.pack(b"LTB1", 2, 2, 1, 2, 2, 1, 2) + b"\x00", "header implies 2"),
        (HEADER.pack(b"LTB1", 2, 2, 2, 2, 2, 1, 2) + b"\x00\x00", "channel count"),
        (HEADER.pack(b"LTB1", 0, 2, 1, 2, 2, 1, 2), "empty image"),
        (HEADER.pack(b"LTB1", 2, 2, 1, 1, 1, 1, 1) + bytes(4), "at least 2 samples"),
        (HEADER.pack(b"LTB1", 2, 2, 1, 2, 1, 2, 2) + bytes(4), "larger than block"),
    ],
)
def test_container_errors(data: bytes, match: str) -> None:
    with pytest.raises(ContainerError, match=match):
        LtbFile.unpack(data)


def test_pack_checks_the_payload() -> None:
    with pytest.raises(ContainerError):
        LtbFile(2, 2, 1, 2, 2, 1, 2, b"").pack()


# ============================================================================
# Pipeline
# ============================================================================


def test_compression_ratio() -> None:
    assert compression_ratio(4, 4, 2, 2) == Fraction(1, 4)
    assert compression_ratio(4, 4, 2, 4) == HALF


@pytest.mark.parametrize(("a", "b", "c", "d"), [(1, 1, 1, 1), (2, 2, 3, 2), (0, 2, 1, 2)])
def test_geometry_errors(a: int, b: int, c: int, d: int) -> None:
    with pytest.raises(CodecError):
        compress_exact(random_raster(4, 4), a, b, c, d)


def test_psnr() -> None:
    zeros = flat([[0] * 10], maxval=1)
    one_off = flat([[1] + [0] * 9], maxval=1)
    ones = flat([[1] * 10], maxval=1)
    assert psnr(zeros, one_off) == pytest.approx(10.0)
    assert psnr(zeros, ones) == pytest.approx(0.0)
    assert psnr(zeros, zeros) == math.inf
    with pytest.raises(CodecError):
        psnr(zeros, flat([[0] * 5]))


def test_sixteen_square_at_a_quarter() -> None:
    r = random_raster(16, 16, seed=11)
    report = roundtrip(r, 4, 4, 2, 2)
    assert report.ratio == Fraction(1, 4)
    assert report.container_bytes == HEADER.size + 64
    assert report.second_pass_lossless
    assert report.psnr_exact < math.inf
    assert report.psnr_stored < math.inf


@pytest.mark.parametrize(("c", "d"), [(2, 4), (2, 2)])
def test_second_pass_is_lossless(c: int, d: int) -> None:
    lossy = 0
    for seed in range(100):
        r = random_raster(8, 8, seed=seed)
        first = reconstruct_exact(compress_exact(r, 4, 4, c, d))
        second = reconstruct_exact(compress_exact(first, 4, 4, c, d))
        assert second == first
        lossy += first != r
    assert lossy > 0


@pytest.mark.parametrize(("width", "height"), [(5, 5), (6, 7), (3, 9)])
def test_second_pass_is_lossless_on_padded_edges(width: int, height: int) -> None:
    for seed in range(50):
        report = roundtrip(random_raster(width, height, seed=seed), 4, 4, 2, 2)
        assert report.second_pass_lossless, seed


def test_uncropped_reconstruction_covers_whole_blocks() -> None:
    image = compress_exact(random_raster(5, 7, seed=1), 4, 4, 2, 2)
    padded = reconstruct_exact(image, crop=False)
    assert (padded.height, padded.width) == (8, 8)
    cropped = reconstruct_exact(image)
    assert (padded.planes[:, :7, :5] == cropped.planes).all()


def test_reconstruction_stays_above_the_original() -> None:
    r = random_raster(8, 8, seed=5)
    first = reconstruct_exact(compress_exact(r, 4, 4, 2, 2))
    assert (first.planes >= r.planes).all()


def test_white_survives_black_does_not() -> None:
    white = flat([[255] * 4] * 4)
    black = flat([[0] * 4] * 4)
    assert reconstruct_exact(compress_exact(white, 4, 4, 2, 2)) == white
    grey = reconstruct_exact(compress_exact(black, 4, 4, 2, 2))
    assert grey != black
    assert reconstruct_exact(compress_exact(grey, 4, 4, 2, 2)) == grey


def test_uneven_sizes_are_cropped() -> None:
    r = random_raster(5, 7, channels=3, seed=2)
    out = decompress(compress(r, 2, 2, 1, 2))
    assert out.planes.shape == (3, 7, 5)


def test_threads_do_not_change_the_result() -> None:
    r = random_raster(16, 12, channels=3, seed=4)
    one = compress_exact(r, 4, 4, 2, 2, threads=1)
    many = compress_exact(r, 4, 4, 2, 2, threads=4)
    assert (one.coefficients == many.coefficients).all()
    assert reconstruct_exact(one, threads=3) == reconstruct_exact(many)
    assert compress(r, 4, 4, 2, 2, threads=2).pack() == compress(r, 4, 4, 2, 2).pack()
