from pathlib import Path

import pytest
from typer.testing import CliRunner

from mvring.cli import app
from mvring.codec import HEADER, parse_pnm, random_raster, write_pnm

runner = CliRunner()


@pytest.fixture
def pgm(tmp_path: Path) -> Path:
    path = tmp_path / "noise.pgm"
    write_pnm(random_raster(16, 16, seed=1), path)
    return path


def test_version() -> None:
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert "mvring 0.1.0" in result.stdout


def test_help() -> None:
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    assert "MV-algebras as idempotent semirings" in result.stdout


# ============================================================================
# mv
# ============================================================================


def test_axioms_pass_on_a_chain() -> None:
    result = runner.invoke(app, ["mv", "axioms", "--algebra", "chain:4"])
    assert result.exit_code == 0
    assert "all laws pass" in result.stdout
    assert "MV6" in result.stdout


def test_axioms_on_the_unit_grid() -> None:
    result = runner.invoke(app, ["mv", "axioms", "-a", "unit", "--grid", "4"])
    assert result.exit_code == 0
    assert "grid of 5 values" in result.stdout


def test_bad_algebra_spec_is_a_usage_error() -> None:
    result = runner.invoke(app, ["mv", "axioms", "--algebra", "ring:3"])
    assert result.exit_code == 2


def test_ops() -> None:
    result = runner.invoke(app, ["mv", "ops", "-a", "chain:2", "1/2", "1/2"])
    assert result.exit_code == 0
    assert "1/2 ⊕ 1/2" in result.stdout
    assert runner.invoke(app, ["mv", "ops", "-a", "chain:2", "1/3", "0"]).exit_code == 2


def test_ops_in_decimal() -> None:
    result = runner.invoke(app, ["--decimal", "mv", "ops", "-a", "chain:3", "1/3", "1/3"])
    assert result.exit_code == 0
    assert "0.3333" in result.stdout


def test_center_and_ideals() -> None:
    center = runner.invoke(app, ["mv", "center", "-a", "chain:4"])
    assert "2 element(s)" in center.stdout
    ideals = runner.invoke(app, ["mv", "ideals", "-a", "product:chain:1,chain:1"])
    assert ideals.exit_code == 0
    assert "4 ideal(s)" in ideals.stdout


def test_semiring_spectrum() -> None:
    result = runner.invoke(app, ["mv", "spec", "-a", "chain:2", "--which", "semiring"])
    assert result.exit_code == 0
    assert "P0  {0, 1/2}  (maximal)" in result.stdout
    assert runner.invoke(app, ["mv", "spec", "-a", "chain:2", "--which", "x"]).exit_code == 2


def test_quotient_by_a_product_element() -> None:
    result = runner.invoke(
        app, ["mv", "quotient", "-a", "product:chain:2,chain:2", "--seed-elements", "(0,1)"]
    )
    assert result.exit_code == 0
    assert "3 class(es)" in result.stdout


def test_reduct_and_recognize() -> None:
    reduct = runner.invoke(app, ["mv", "reduct", "-a", "chain:2"])
    assert reduct.exit_code == 0
    assert "∗ is an isomorphism" in reduct.stdout
    recognize = runner.invoke(app, ["mv", "recognize", "-a", "product:chain:1,chain:1"])
    assert recognize.exit_code == 0
    assert "reconstruction reproduces ⊕ and ∗" in recognize.stdout


def test_recognize_over_the_cap() -> None:
    assert runner.invoke(app, ["mv", "recognize", "-a", "chain:6"]).exit_code == 2


def test_gamma() -> None:
    result = runner.invoke(app, ["mv", "gamma", "--unit", "2", "--eval", "top", "--eval", "5"])
    assert result.exit_code == 0
    assert "γ(top) = 2" in result.stdout
    assert "γ(5) = 2" in result.stdout
    assert "γ is a homomorphism on the nonnegative cone" in result.stdout


def test_matrix_scan() -> None:
    result = runner.invoke(app, ["mv", "matrix", "-a", "chain:1", "--idempotent-scan", "2"])
    assert result.exit_code == 0
    assert "11 idempotent matrices" in result.stdout
    bad = ["mv", "matrix", "-a", "chain:1", "--idempotent-scan", "1", "--reduct", "x"]
    assert runner.invoke(app, bad).exit_code == 2


def test_strong(tmp_path: Path) -> None:
    half = tmp_path / "half.txt"
    half.write_text("reduct join-odot\nelements 0 1/2\n")
    result = runner.invoke(app, ["mv", "strong", "-a", "chain:2", "--module", str(half)])
    assert result.exit_code == 1
    assert "not strong" in result.stdout

    full = tmp_path / "full.txt"
    full.write_text("reduct join-odot\n")
    result = runner.invoke(app, ["mv", "strong", "-a", "chain:2", "-m", str(full)])
    assert result.exit_code == 0
    assert "End(M) cross-check  agrees" in result.stdout


def test_strong_missing_module(tmp_path: Path) -> None:
    missing = tmp_path / "nope.txt"
    result = runner.invoke(app, ["mv", "strong", "-a", "chain:2", "-m", str(missing)])
    assert result.exit_code == 2


def test_dump() -> None:
    result = runner.invoke(app, ["mv", "dump", "-a", "chain:2"])
    assert result.stdout == "chain 2\n"


# ============================================================================
# logic
# ============================================================================


def test_taut() -> None:
    result = runner.invoke(app, ["logic", "taut", "--chain", "2", "x1 -> x1"])
    assert result.exit_code == 0
    assert "tautology" in result.stdout


def test_taut_falsified() -> None:
    result = runner.invoke(app, ["logic", "taut", "-k", "2", "(~x1 -> x1) -> x1"])
    assert result.exit_code == 1
    assert "x1 = 1/2" in result.stdout
    assert "falsified" in result.stdout


def test_syntax_error_is_a_usage_error() -> None:
    assert runner.invoke(app, ["logic", "taut", "x1 ->"]).exit_code == 2


def test_tau_and_parse() -> None:
    tau = runner.invoke(app, ["logic", "tau", "~x1 -> x2"])
    assert tau.stdout.strip() == "x1** ⊕ x2"
    parsed = runner.invoke(app, ["logic", "parse", "(x1 -> x2)"])
    assert parsed.stdout.splitlines() == ["x1 -> x2", "variables  x1, x2", "size       3"]


# ============================================================================
# k0 and sheaf
# ============================================================================


def test_k0_enumerate() -> None:
    result = runner.invoke(app, ["k0", "enumerate", "-a", "chain:1", "--max-dim", "2"])
    assert result.exit_code == 0
    assert "structure   Z x Z  (partial)" in result.stdout
    assert "k_S is a monoid morphism" in result.stdout


def test_k0_csv_report() -> None:
    result = runner.invoke(app, ["k0", "enumerate", "-a", "chain:1", "--report", "csv"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "class_id,dim,representative,sum_table"
    bad = runner.invoke(app, ["k0", "enumerate", "-a", "chain:1", "--report", "xml"])
    assert bad.exit_code == 2


def test_sheaf_sections() -> None:
    result = runner.invoke(app, ["sheaf", "sections", "-a", "product:chain:2,chain:2"])
    assert result.exit_code == 0
    assert "primes  2" in result.stdout
    assert "φ is an isomorphism of MV-algebras" in result.stdout
    assert "negation         carried along φ" in result.stdout


def test_sheaf_recognizes_the_negation_on_small_sections() -> None:
    result = runner.invoke(app, ["sheaf", "sections", "-a", "chain:4"])
    assert result.exit_code == 0
    assert "negation         recognized on Ŝ, agrees" in result.stdout


# ============================================================================
# ltb
# ============================================================================


def test_compress_and_decompress(pgm: Path, tmp_path: Path) -> None:
    packed = tmp_path / "noise.ltb"
    result = runner.invoke(
        app, ["ltb", "compress", str(pgm), str(packed), "--block", "4x4", "--target", "2x2"]
    )
    assert result.exit_code == 0
    assert "ρ = 0.25" in result.stdout
    assert "96 bytes" in result.stdout

    again = tmp_path / "again.ltb"
    runner.invoke(app, ["--threads", "3", "ltb", "compress", str(pgm), str(again)])
    assert again.read_bytes() == packed.read_bytes()

    out = tmp_path / "out.pgm"
    result = runner.invoke(app, ["ltb", "decompress", str(packed), str(out)])
    assert result.exit_code == 0
    raster = parse_pnm(out.read_bytes())
    assert (raster.width, raster.height, raster.channels) == (16, 16, 1)


def test_roundtrip(pgm: Path) -> None:
    result = runner.invoke(app, ["--seed", "3", "ltb", "roundtrip", str(pgm), "--trials", "2"])
    assert result.exit_code == 0
    assert "random trials     2/2 lossless" in result.stdout
    assert "second pass is lossless" in result.stdout


def test_bad_block_option(pgm: Path, tmp_path: Path) -> None:
    out = tmp_path / "x.ltb"
    result = runner.invoke(app, ["ltb", "compress", str(pgm), str(out), "--block", "4by4"])
    assert result.exit_code == 2
    result = runner.invoke(app, ["ltb", "compress", str(pgm), str(out), "--target", "5x5"])
    assert result.exit_code == 2


def test_missing_and_corrupt_inputs(tmp_path: Path) -> None:
    missing = tmp_path / "missing.pgm"
    assert runner.invoke(app, ["ltb", "compress", str(missing), "x.ltb"]).exit_code == 2
    junk = tmp_path / "junk.ltb"
    junk.write_bytes(b"not a container at all, really not")
    out = tmp_path / "out.pgm"
    assert runner.invoke(app, ["ltb", "decompress", str(junk), str(out)]).exit_code == 2


def test_container_with_bad_block_sizes(tmp_path: Path) -> None:
    packed = tmp_path / "tiny.ltb"
    packed.write_bytes(HEADER.pack(b"LTB1", 2, 2, 1, 1, 1, 1, 1) + bytes(4))
    out = tmp_path / "out.pgm"
    result = runner.invoke(app, ["ltb", "decompress", str(packed), str(out)])
    assert result.exit_code == 2
    assert not out.exists()


def test_roundtrip_on_an_uneven_image(tmp_path: Path) -> None:
    odd = tmp_path / "odd.pgm"
    write_pnm(random_raster(6, 7, seed=0), odd)
    result = runner.invoke(app, ["ltb", "roundtrip", str(odd), "--trials", "3"])
    assert result.exit_code == 0
    assert "random trials     3/3 lossless" in result.stdout


def test_basis() -> None:
    result = runner.invoke(app, ["ltb", "basis", "--m", "5", "--n", "3"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[1] == "1/2 1/2   0"
    assert runner.invoke(app, ["ltb", "basis", "--m", "2", "--n", "3"]).exit_code == 2
