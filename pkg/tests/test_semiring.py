from fractions import Fraction

import pytest

from mvring.algebra import chain, check_axioms, is_isomorphic, product
from mvring.config import CapExceeded
from mvring.semiring import (
    TOP,
    RecognitionRefused,
    SemiringError,
    SemiringMap,
    SemiringTable,
    boolean_semiring,
    check_gamma,
    check_semifield_laws,
    gamma_truncate,
    identity_map,
    join_odot_reduct,
    lgroup_semifield_bridge,
    meet_oplus_reduct,
    parse_field_value,
    product_semiring,
    r_spec,
    recognize_mv_semiring,
    reconstruct_mv,
    reducts,
)

HALF = Fraction(1, 2)


def min_lattice() -> SemiringTable:
    """The three-element chain with ∨ = max and · = min: a semiring but not MV."""
    return SemiringTable.from_operations("min3", [0, HALF, 1], max, min, 0, 1)


# ============================================================================
# Tables and maps
# ============================================================================


def test_boolean_semiring() -> None:
    s = boolean_semiring()
    assert s.violation() is None
    assert s.mul(1, 1) == 1
    assert s.leq(0, 1)
    assert not s.leq(1, 0)
    assert s.join_all([0, 1, 0]) == 1
    assert s.join_all([]) == 0


def test_from_operations_rejects_a_non_idempotent_join() -> None:
    with pytest.raises(SemiringError, match="S1"):
        SemiringTable.from_operations("xor", [0, 1], lambda x, y: (x + y) % 2, min, 0, 1)


def test_from_operations_rejects_values_outside_the_carrier() -> None:
    with pytest.raises(SemiringError, match="carrier"):
        SemiringTable.from_operations("sum", [0, 1], lambda x, y: x + y, min, 0, 1)


def test_unknown_element() -> None:
    with pytest.raises(SemiringError):
        boolean_semiring().index(2)


def test_semiring_maps() -> None:
    s = boolean_semiring()
    assert identity_map(s).violation() is None
    assert identity_map(s).is_surjective()
    with pytest.raises(SemiringError, match="h\\(0\\)"):
        SemiringMap.build(s, s, lambda x: 1)


def test_product_semiring_spectrum() -> None:
    s = product_semiring(boolean_semiring(), boolean_semiring())
    assert len(s) == 4
    spec = r_spec(s)
    assert len(spec.ideals) == 4
    assert [p.describe() for p in spec.primes] == ["{(0,0), (0,1)}", "{(0,0), (1,0)}"]
    assert spec.maximal == spec.primes
    assert spec.basis[(1, 1)] == [0, 1]
    assert spec.basis[(0, 0)] == []


def test_chain_reduct_has_a_single_prime() -> None:
    spec = r_spec(join_odot_reduct(chain(2)))
    assert [p.describe() for p in spec.primes] == ["{0, 1/2}"]
    assert spec.maximal == spec.primes


# ============================================================================
# Reducts and recognition
# ============================================================================


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_star_maps_one_reduct_onto_the_other(k: int) -> None:
    r = reducts(chain(k))
    assert r.star_is_isomorphism, r.star_problem
    assert r.join_odot.zero == 0 and r.join_odot.one == 1
    assert r.meet_oplus.zero == 1 and r.meet_oplus.one == 0


@pytest.mark.parametrize(
    "algebra",
    [chain(1), chain(3), chain(5), product(chain(1), chain(1)), product(chain(2), chain(1))],
    ids=lambda a: a.name,
)
def test_recognition_recovers_the_algebra(algebra) -> None:
    s = join_odot_reduct(algebra)
    rec = recognize_mv_semiring(s)
    assert rec.recognized
    assert rec.star == {x: algebra.star(x) for x in algebra.elements}
    rebuilt = reconstruct_mv(s, rec.require())
    assert rebuilt.oplus_table == algebra.oplus_table
    assert rebuilt.star_table == algebra.star_table
    assert check_axioms(rebuilt).all_passed


def test_recognition_of_the_oplus_reduct() -> None:
    a = chain(2)
    rec = recognize_mv_semiring(meet_oplus_reduct(a))
    assert rec.recognized
    assert is_isomorphic(reconstruct_mv(meet_oplus_reduct(a), rec.star), a)


def test_recognition_refuses_a_plain_lattice() -> None:
    rec = recognize_mv_semiring(min_lattice())
    assert not rec.recognized
    assert rec.reason == "condition (i) holds but (ii) fails"
    assert rec.candidates == {0: [1], HALF: [0], 1: [0]}
    assert rec.maps_tried == 1
    assert rec.witness == (HALF, 0)
    with pytest.raises(RecognitionRefused) as excinfo:
        rec.require()
    assert excinfo.value.witness == (HALF, 0)


def test_recognition_is_capped() -> None:
    with pytest.raises(CapExceeded) as excinfo:
        recognize_mv_semiring(join_odot_reduct(chain(6)))
    assert excinfo.value.cap == "RECOGNITION_MAX_SIZE"
    assert excinfo.value.requested == 7


def test_reconstruction_needs_a_total_map() -> None:
    with pytest.raises(SemiringError):
        reconstruct_mv(boolean_semiring(), {0: 1})


# ============================================================================
# Semifield and Γ
# ============================================================================


def test_semifield_laws_hold() -> None:
    f = lgroup_semifield_bridge(3)
    failed = [c.name for c in check_semifield_laws(f) if not c.passed]
    assert failed == []


def test_semifield_operations() -> None:
    f = lgroup_semifield_bridge(2)
    assert f.meet(3, TOP) == 3
    assert f.add(3, TOP) is TOP
    assert f.join(-1, 4) == 4
    assert f.neg(5) == -5
    assert f.zero is TOP
    assert f.one == 0
    with pytest.raises(SemiringError):
        f.neg(TOP)


def test_unit_must_be_positive() -> None:
    with pytest.raises(SemiringError):
        lgroup_semifield_bridge(0)


def test_parse_field_value() -> None:
    assert parse_field_value("top") is TOP
    assert parse_field_value(" -7 ") == -7
    with pytest.raises(SemiringError):
        parse_field_value("seven")


def test_gamma_truncation_is_a_chain() -> None:
    g = gamma_truncate(lgroup_semifield_bridge(4))
    assert g.algebra.elements == (0, 1, 2, 3, 4)
    assert is_isomorphic(g.algebra, chain(4))
    assert check_axioms(g.algebra).all_passed
    assert g.gamma(TOP) == 4
    assert g.gamma(-3) == 0
    assert g.gamma(9) == 4
    assert g.gamma(2) == 2


def test_gamma_is_a_homomorphism_only_on_the_cone() -> None:
    g = gamma_truncate(lgroup_semifield_bridge(2))
    report = check_gamma(g)
    assert report.holds_on_cone
    assert report.meet_failures == []
    assert (-5, 3) in report.sum_failures
    assert all(
        (a is TOP or a >= 0) and (b is TOP or b >= 0) for a, b in report.cone_sum_failures
    )
    assert report.checked == len(g.semifield.default_sample()) ** 2
