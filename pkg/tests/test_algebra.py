from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvring.algebra import (
    MvAlgebraError,
    MvHomomorphism,
    UnitInterval,
    all_ideals,
    boolean_center,
    chain,
    check_axioms,
    congruences,
    diagonal,
    dump_algebra,
    find_isomorphism,
    ideal_generated,
    identity,
    is_isomorphic,
    is_prime,
    load_algebra,
    parse_algebra_spec,
    parse_element,
    parse_elements,
    parse_finite_spec,
    product,
    projection,
    quotient,
    quotient_map,
    spectra,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

unit_values = st.fractions(min_value=0, max_value=1, max_denominator=60)


# ============================================================================
# Carriers and laws
# ============================================================================


@pytest.mark.parametrize("k", range(1, 7))
def test_chain_satisfies_every_law(k: int) -> None:
    report = check_axioms(chain(k))
    assert report.exhaustive
    assert report.sample_size == k + 1
    assert report.all_passed, [r.law.name for r in report.failures]


def test_product_satisfies_every_law() -> None:
    report = check_axioms(product(chain(2), chain(1)))
    assert report.sample_size == 6
    assert report.all_passed


def test_unit_interval_is_checked_on_a_grid() -> None:
    report = check_axioms(UnitInterval(), grid=4)
    assert not report.exhaustive
    assert report.sample_size == 5
    assert report.all_passed


def test_axioms_only_skips_derived_properties() -> None:
    report = check_axioms(chain(2), include_properties=False)
    assert [r.law.name for r in report.results] == [
        "MV1", "MV2", "MV3", "MV4", "MV5", "MV6", "MV7", "MV8", "MV9", "MV5'", "MV6'",
    ]


def test_corrupted_oplus_table_is_reported() -> None:
    bad = load_algebra("chain 2\noplus\n0 1 2\n1 1 2\n2 2 2\nstar\n2 1 0\n")
    report = check_axioms(bad)
    assert not report.all_passed
    failed = {r.law.name: r for r in report.failures}
    assert "MV9" in failed
    assert failed["MV9"].witness == (HALF,)


def test_chain_operations() -> None:
    a = chain(4)
    three = Fraction(3, 4)
    assert a.oplus(HALF, three) == 1
    assert a.odot(HALF, three) == QUARTER
    assert a.star(QUARTER) == three
    assert a.ominus(three, QUARTER) == HALF
    assert a.arrow(three, QUARTER) == HALF
    assert a.distance(QUARTER, three) == HALF
    assert a.join(QUARTER, three) == three
    assert a.meet(QUARTER, three) == QUARTER
    assert a.leq(QUARTER, HALF)
    assert not a.leq(three, HALF)


def test_product_elements_are_lexicographic() -> None:
    p = product(chain(2), chain(2))
    assert len(p) == 9
    assert p.elements[:3] == ((0, 0), (0, HALF), (0, 1))
    assert p.name == "product:chain:2,chain:2"
    assert p.zero == (0, 0)
    assert p.one == (1, 1)


def test_product_needs_two_factors() -> None:
    with pytest.raises(MvAlgebraError):
        product(chain(2))


def test_chain_needs_a_step() -> None:
    with pytest.raises(MvAlgebraError):
        chain(0)


def test_bound_elements() -> None:
    a = chain(2)
    x = a.element(HALF)
    assert x.oplus(x).value == 1
    assert x.odot(x).value == 0
    assert x.star().value == HALF
    with pytest.raises(MvAlgebraError):
        x.oplus(chain(3).element(Fraction(1, 3)))


def test_unit_interval_rejects_outside_values() -> None:
    with pytest.raises(MvAlgebraError):
        UnitInterval().oplus(Fraction(3, 2), 0)


@given(unit_values, unit_values)
def test_unit_interval_mv6(x: Fraction, y: Fraction) -> None:
    u = UnitInterval()
    left = u.oplus(u.star(u.oplus(u.star(x), y)), y)
    right = u.oplus(u.star(u.oplus(u.star(y), x)), x)
    assert left == right == max(x, y)


@given(unit_values, unit_values, unit_values)
def test_unit_interval_oplus_distributes_over_meet(x: Fraction, y: Fraction, z: Fraction) -> None:
    u = UnitInterval()
    assert u.oplus(x, u.meet(y, z)) == u.meet(u.oplus(x, y), u.oplus(x, z))


def test_boolean_center() -> None:
    assert boolean_center(chain(4)) == (0, 1)
    assert boolean_center(product(chain(2), chain(2))) == ((0, 0), (0, 1), (1, 0), (1, 1))
    with pytest.raises(MvAlgebraError):
        boolean_center(UnitInterval())


# ============================================================================
# Ideals, spectra and quotients
# ============================================================================


def test_chains_are_simple() -> None:
    spec = spectra(chain(3))
    assert len(spec.ideals) == 2
    assert spec.is_simple
    assert spec.is_semisimple
    assert len(spec.maximal) == 1
    assert spec.maximal[0].elements == frozenset([0])


def test_boolean_square_spectrum() -> None:
    a = product(chain(1), chain(1))
    spec = spectra(a)
    assert len(spec.ideals) == 4
    assert len(spec.primes) == 2
    assert len(spec.maximal) == 2
    assert spec.radical == frozenset([(0, 0)])
    assert spec.is_semisimple
    assert not spec.is_simple
    # (1,1) avoids both primes, (0,0) avoids none.
    assert spec.basis[(1, 1)] == [0, 1]
    assert spec.basis[(0, 0)] == []


def test_ideal_generated_closes_downward_and_under_oplus() -> None:
    a = product(chain(2), chain(2))
    ideal = ideal_generated(a, [(0, HALF)])
    assert ideal.sorted_elements() == ((0, 0), (0, HALF), (0, 1))
    assert ideal.is_proper
    assert is_prime(ideal)
    assert ideal.describe() == "{(0,0), (0,1/2), (0,1)}"


def test_improper_ideal_is_not_prime() -> None:
    a = chain(2)
    whole = ideal_generated(a, [HALF])
    assert not whole.is_proper
    assert not is_prime(whole)


@pytest.mark.parametrize(
    "algebra",
    [chain(2), chain(4), product(chain(1), chain(1)), product(chain(2), chain(1))],
    ids=lambda a: a.name,
)
def test_congruences_match_ideals(algebra) -> None:
    assert len(congruences(algebra)) == len(all_ideals(algebra))


def test_quotient_by_a_coordinate_ideal() -> None:
    a = product(chain(2), chain(2))
    q = quotient(a, ideal_generated(a, [(0, 1)]))
    assert len(q.algebra) == 3
    assert q.classes_described
    assert is_isomorphic(q.algebra, chain(2))
    assert q.classes()[(0, 0)] == ((0, 0), (0, HALF), (0, 1))
    h = quotient_map(q)
    assert h.is_surjective()
    assert h((HALF, 1)) == (HALF, 0)


def test_quotient_rejects_a_non_ideal() -> None:
    with pytest.raises(MvAlgebraError):
        quotient(chain(2), [0, HALF])


# ============================================================================
# Morphisms
# ============================================================================


def test_projection_and_diagonal_compose_to_identity() -> None:
    a = chain(2)
    p = product(a, a)
    first = projection(p, 0)
    assert first((HALF, 1)) == HALF
    assert diagonal(a, p).then(first).table == identity(a).table


def test_projection_needs_a_product() -> None:
    with pytest.raises(MvAlgebraError):
        projection(chain(2), 0)


def test_build_rejects_a_non_homomorphism() -> None:
    with pytest.raises(MvAlgebraError):
        MvHomomorphism.build(chain(2), chain(2), lambda x: x / 2)


def test_isomorphism_search() -> None:
    assert find_isomorphism(chain(2), chain(3)) is None
    assert not is_isomorphic(chain(3), product(chain(1), chain(1)))
    iso = find_isomorphism(product(chain(1), chain(2)), product(chain(2), chain(1)))
    assert iso is not None
    assert iso.is_injective()
    assert iso.violation() is None


# ============================================================================
# Spec strings and dumps
# ============================================================================


def test_parse_nested_product_spec() -> None:
    a = parse_finite_spec("product:(product:chain:1,chain:1),chain:2")
    assert len(a) == 12
    assert len(a.factors) == 2


@pytest.mark.parametrize("spec", ["bogus", "chain:x", "chain:0", "ring:3"])
def test_bad_specs(spec: str) -> None:
    with pytest.raises(MvAlgebraError):
        parse_algebra_spec(spec)


def test_unit_is_not_finite() -> None:
    assert isinstance(parse_algebra_spec("unit"), UnitInterval)
    with pytest.raises(MvAlgebraError):
        parse_finite_spec("unit")


def test_dump_and_load() -> None:
    a = product(chain(2), chain(1))
    assert dump_algebra(a) == "product chain:2,chain:1\n"
    assert load_algebra(dump_algebra(a)) == a
    assert load_algebra(dump_algebra(a, tables=True)) == a


def test_table_dump_needs_tables() -> None:
    with pytest.raises(MvAlgebraError):
        load_algebra("table 2\n")
    b = load_algebra("table 2\noplus\n0 1\n1 1\nstar\n1 0\n")
    assert check_axioms(b).all_passed


def test_parse_element() -> None:
    assert parse_element("1/2", chain(2)) == HALF
    assert parse_element("(0,1/2)", product(chain(1), chain(2))) == (0, HALF)
    assert parse_element("2/4", chain(2)) == HALF
    assert parse_element("0.3", UnitInterval()) == Fraction(3, 10)
    with pytest.raises(MvAlgebraError):
        parse_element("1/3", chain(2))


def test_parse_elements_keeps_tuples_whole() -> None:
    a = product(chain(1), chain(2))
    assert parse_elements("(0,1/2), (1,0)", a) == [(0, HALF), (1, 0)]
    assert parse_elements("", a) == []
    with pytest.raises(MvAlgebraError):
        parse_elements("(0,1/2", a)
