from fractions import Fraction

import pytest

from mvring.algebra import chain, product
from mvring.config import CapExceeded
from mvring.semimodule import (
    FiniteSemimodule,
    Reduct,
    SemimoduleError,
    SemimoduleMap,
    SqMatrix,
    all_matrices,
    apply_matrix,
    brute_force_projective,
    characteristic,
    check_universal_property,
    enumerate_homs,
    find_isomorphism,
    free_semimodule,
    hom_from_matrix,
    hom_semiring_check,
    identity_matrix,
    idempotent_scan,
    is_full_embedding,
    is_idempotent,
    is_isomorphic,
    is_strong,
    load_module,
    matrix_from_hom,
    matrix_star,
    quotient_semimodule,
    reduct_semimodule,
    restrict_scalars,
    row_semimodule,
    strong_via_endomorphisms,
    subreduct_semimodule,
    tensor_product,
    tensor_swap_isomorphism,
    zero_matrix,
)
from mvring.semiring import (
    SemiringMap,
    boolean_semiring,
    identity_map,
    join_odot_reduct,
)

HALF = Fraction(1, 2)


# ============================================================================
# Matrices
# ============================================================================


def test_characteristic_vector() -> None:
    v = characteristic(boolean_semiring(), 3, 1)
    assert v.entries == (0, 1, 0)
    assert v.support() == (1,)


def test_row_vectors_multiply_on_the_left() -> None:
    s = boolean_semiring()
    k = SqMatrix.of(s, [[0, 1], [0, 0]])
    assert apply_matrix(characteristic(s, 2, 0), k).entries == (0, 1)
    assert apply_matrix(characteristic(s, 2, 1), k).entries == (0, 0)


def test_identity_and_zero_matrices() -> None:
    s = join_odot_reduct(chain(2))
    a = SqMatrix.of(s, [[HALF, 1], [0, HALF]])
    iota = identity_matrix(s, 2)
    assert matrix_star(iota, a) == a
    assert matrix_star(a, iota) == a
    assert matrix_star(a, zero_matrix(s, 2)) == zero_matrix(s, 2)
    assert is_idempotent(iota)
    assert is_idempotent(zero_matrix(s, 2))
    # (a ⋆ a)(0, 0) = 1/2 ⊙ 1/2 = 0
    assert matrix_star(a, a)[0, 0] == 0
    assert not is_idempotent(a)


def test_matrix_shapes_must_agree() -> None:
    s = boolean_semiring()
    with pytest.raises(SemimoduleError):
        matrix_star(SqMatrix.of(s, [[1, 0]]), SqMatrix.of(s, [[1, 0]]))
    with pytest.raises(SemimoduleError):
        SqMatrix.of(s, [[1, 0], [1]])
    with pytest.raises(SemimoduleError):
        SqMatrix.of(s, [[2]])


def test_idempotent_scan_over_booleans() -> None:
    s = boolean_semiring()
    assert len(idempotent_scan(s, 1)) == 2
    assert len(idempotent_scan(s, 2)) == 11


def test_matrix_scan_is_capped() -> None:
    with pytest.raises(CapExceeded) as excinfo:
        next(all_matrices(boolean_semiring(), 4))
    assert excinfo.value.cap == "MATRIX_SCAN_MAX"


@pytest.mark.parametrize(
    ("semiring", "n"),
    [
        (boolean_semiring(), 1),
        (boolean_semiring(), 2),
        (join_odot_reduct(chain(2)), 1),
        (join_odot_reduct(chain(2)), 2),
    ],
)
def test_matrices_are_the_endomorphisms_of_free_modules(semiring, n: int) -> None:
    check = hom_semiring_check(semiring, n)
    assert check.holds, check.problems
    assert check.matrices == check.endomorphisms == len(semiring) ** (n * n)


def test_matrix_round_trips_through_its_hom() -> None:
    s = join_odot_reduct(chain(2))
    k = SqMatrix.of(s, [[HALF, 0], [1, HALF]])
    h = hom_from_matrix(k)
    assert h.violation() is None
    assert matrix_from_hom(h, 2, 2) == k


def test_rectangular_matrix_hom() -> None:
    s = boolean_semiring()
    h = hom_from_matrix(SqMatrix.of(s, [[1, 1]]))
    assert h((1,)) == (1, 1)
    assert h.is_injective
    assert not h.is_surjective


def test_matrix_from_hom_rejects_non_homomorphisms() -> None:
    m = free_semimodule(boolean_semiring(), 1)
    top = m.index((1,))
    constant = SemimoduleMap(m, m, (top,) * len(m))
    with pytest.raises(SemimoduleError, match="not a homomorphism"):
        matrix_from_hom(constant, 1, 1)


# ============================================================================
# Modules and homomorphisms
# ============================================================================


def test_free_module() -> None:
    m = free_semimodule(boolean_semiring(), 2)
    assert len(m) == 4
    assert m.join((0, 1), (1, 0)) == (1, 1)
    assert m.act(0, (1, 1)) == (0, 0)
    assert m.generators == ((0, 1), (1, 0))
    assert len(free_semimodule(boolean_semiring(), 0)) == 1


def test_invalid_action_is_rejected() -> None:
    with pytest.raises(SemimoduleError, match="SM5"):
        FiniteSemimodule.from_operations(
            "bad", boolean_semiring(), [0, 1], max, lambda a, x: x, 0
        )


def test_row_module_of_an_idempotent_is_projective() -> None:
    s = boolean_semiring()
    u = SqMatrix.of(s, [[1, 1], [0, 0]])
    assert is_idempotent(u)
    m = row_semimodule(u)
    assert m.elements == ((0, 0), (1, 1))
    result = brute_force_projective(m, 2)
    assert result.projective
    assert result.projection is not None and result.section is not None
    assert result.section.then(result.projection).is_identity()


def test_nilpotent_subreduct_is_not_projective() -> None:
    m = subreduct_semimodule(chain(2), [0, HALF])
    result = brute_force_projective(m, 2)
    assert not result.projective
    assert result.candidates == 12


def test_homs_out_of_a_chain_are_fixed_by_the_top() -> None:
    m = reduct_semimodule(chain(2))
    homs = enumerate_homs(m, m)
    assert len(homs) == 3
    assert sorted(h(1) for h in homs) == [0, HALF, 1]
    assert all(h(HALF) == chain(2).odot(HALF, h(1)) for h in homs)


def test_modules_over_different_semirings_have_no_homs() -> None:
    with pytest.raises(SemimoduleError):
        enumerate_homs(reduct_semimodule(chain(2)), free_semimodule(boolean_semiring(), 1))


# ============================================================================
# Modules from MV-algebras
# ============================================================================


def test_reduct_modules() -> None:
    a = chain(2)
    jo = reduct_semimodule(a)
    mo = reduct_semimodule(a, Reduct.MEET_OPLUS)
    assert jo.zero == 0
    assert mo.zero == 1
    assert mo.join(HALF, 1) == HALF
    assert mo.act(HALF, HALF) == 1


def test_subreducts_must_be_closed() -> None:
    with pytest.raises(SemimoduleError):
        subreduct_semimodule(chain(2), [0, 1])
    with pytest.raises(SemimoduleError):
        subreduct_semimodule(chain(2), [HALF])


def test_quotient_module() -> None:
    a = product(chain(1), chain(1))
    m = quotient_semimodule(a, [(0, 0), (0, 1)])
    assert len(m) == 2
    assert m.act((1, 1), (1, 0)) == (1, 0)
    assert m.act((0, 1), (1, 0)) == (0, 0)


def test_load_module() -> None:
    a = chain(2)
    assert len(load_module("# half\nreduct join-odot\nelements 0 1/2\n", a)) == 2
    assert len(load_module("reduct meet-oplus\nfree 2\n", a)) == 9
    assert len(load_module("", a)) == 3
    b = product(chain(1), chain(1))
    assert len(load_module("quotient (0,1)\n", b)) == 2


@pytest.mark.parametrize(
    "text",
    [
        "reduct sideways",
        "free x",
        "elements 0\nfree 1",
        "bogus 1",
        "reduct meet-oplus\nquotient 0",
    ],
)
def test_load_module_errors(text: str) -> None:
    with pytest.raises(SemimoduleError):
        load_module(text, chain(2))


# ============================================================================
# Strongness
# ============================================================================


def test_algebra_is_strong_over_itself() -> None:
    a = chain(2)
    assert is_strong(a, reduct_semimodule(a)).strong
    assert is_strong(a, reduct_semimodule(a, Reduct.MEET_OPLUS)).strong


def test_nilpotent_subreduct_is_not_strong() -> None:
    a = chain(2)
    result = is_strong(a, subreduct_semimodule(a, [0, HALF]))
    assert not result.strong
    assert result.witness == (HALF, 0, HALF)


def test_quotient_module_is_strong() -> None:
    a = product(chain(1), chain(1))
    assert is_strong(a, quotient_semimodule(a, [(0, 0), (0, 1)])).strong


def test_endomorphism_cross_check_agrees() -> None:
    a = chain(2)
    full = strong_via_endomorphisms(a, reduct_semimodule(a))
    assert full.endomorphisms == 6
    assert len(full.image) == 3
    assert full.strong
    assert full.agrees

    half = strong_via_endomorphisms(a, subreduct_semimodule(a, [0, HALF]))
    assert half.endomorphisms == 2
    assert not half.negation_well_defined
    assert not half.strong
    assert half.agrees


def test_cross_check_is_capped() -> None:
    with pytest.raises(CapExceeded):
        strong_via_endomorphisms(chain(3), reduct_semimodule(chain(3)))


# ============================================================================
# Tensor products
# ============================================================================


def test_semiring_tensored_with_itself() -> None:
    m = reduct_semimodule(chain(2))
    t = tensor_product(m, m)
    assert len(t.module) == 3
    assert is_isomorphic(t.module, m)
    assert t.format(t.tensor(HALF, HALF)) == "0"
    assert t.format(t.tensor(1, 1)) == "1⊗1"
    assert t.format(t.tensor(HALF, 1)) == "1/2⊗1 ∨ 1⊗1/2"
    assert t.tensor(HALF, 1) == t.tensor(1, HALF)


def test_tensor_with_a_free_module() -> None:
    s = boolean_semiring()
    one, two = free_semimodule(s, 1), free_semimodule(s, 2)
    t = tensor_product(one, two)
    assert len(t.module) == 4
    assert find_isomorphism(t.module, two) is not None
    swap = tensor_swap_isomorphism(one, two)
    assert swap.is_injective and swap.is_surjective


def test_universal_property() -> None:
    m = reduct_semimodule(chain(2))
    t = tensor_product(m, m)
    report = check_universal_property(t, [m, free_semimodule(m.semiring, 1)])
    assert report.canonical_problem is None
    assert report.failures == []
    assert report.holds


def test_tensor_is_capped() -> None:
    m = reduct_semimodule(chain(2))
    with pytest.raises(CapExceeded):
        tensor_product(m, free_semimodule(m.semiring, 2))


# ============================================================================
# Restriction of scalars
# ============================================================================


def test_restriction_along_the_identity_is_full() -> None:
    s = boolean_semiring()
    m = free_semimodule(s, 2)
    assert restrict_scalars(identity_map(s), m).action_table == m.action_table
    report = is_full_embedding(identity_map(s), [m])
    assert report.pairs == 1
    assert report.full


def test_restriction_to_booleans_is_not_full() -> None:
    t = join_odot_reduct(chain(2))
    h = SemiringMap.build(boolean_semiring(), t, {0: 0, 1: 1})
    report = is_full_embedding(h, [reduct_semimodule(chain(2))])
    assert not report.full
    assert len(report.missing) == 3
