from fractions import Fraction

import pytest

from mvring.algebra import MvHomomorphism, chain, diagonal, identity, product, projection
from mvring.ktheory import (
    K0Element,
    K0Group,
    KTheoryError,
    catalog_for,
    compose_class_maps,
    csv_report,
    describe_group,
    direct_sum,
    enumerate_projectives,
    k0_map,
    mutual_expressibility,
    pad,
    padding_invariant,
    projective_presentation,
    projectivity_agreement,
    smith_diagonal,
    submodules_of_free,
)
from mvring.semimodule import SqMatrix, is_isomorphic
from mvring.semiring import boolean_semiring, join_odot_reduct

HALF = Fraction(1, 2)


@pytest.fixture(scope="module")
def boolean_k0() -> K0Group:
    return K0Group(enumerate_projectives(boolean_semiring(), 2))


# ============================================================================
# Formal differences and Smith normal form
# ============================================================================


def test_formal_differences_cancel() -> None:
    x = K0Element.of([1, 2, 0], [2])
    assert x == K0Element.of([1])
    assert str(x) == "[P1]"
    assert str(K0Element.of([2], [1])) == "[P2] - [P1]"
    assert str(K0Element.of()) == "0"
    assert (x - x).is_identity
    assert -K0Element.of([3], [1]) == K0Element.of([1], [3])


@pytest.mark.parametrize(
    ("rows", "n_cols", "expected"),
    [
        ([[2, 4], [6, 8]], 2, [2, 4]),
        ([[2, 0], [0, 3]], 2, [1, 6]),
        ([[2, -1, 0]], 3, [1]),
        ([[0, 0]], 2, []),
        ([], 2, []),
    ],
)
def test_smith_diagonal(rows: list[list[int]], n_cols: int, expected: list[int]) -> None:
    assert smith_diagonal(rows, n_cols) == expected


def test_describe_group() -> None:
    assert describe_group(2, []) == "Z x Z"
    assert describe_group(1, [2, 4]) == "Z x C2 x C4"
    assert describe_group(0, []) == "trivial"


# ============================================================================
# Projective classes
# ============================================================================


def test_boolean_catalog(boolean_k0: K0Group) -> None:
    catalog = boolean_k0.catalog
    assert catalog.scanned == 13
    assert [str(c.representative) for c in catalog.classes] == [
        "[[0]]",
        "[[1]]",
        "[[1,0],[0,1]]",
        "[[1,0],[1,1]]",
    ]
    assert [len(c.module) for c in catalog.classes] == [1, 2, 4, 3]
    assert catalog.zero.dim == 1
    assert str(catalog.classes[3]) == "P3"


def test_catalog_reports_progress() -> None:
    lines: list[str] = []
    enumerate_projectives(boolean_semiring(), 2, lines.append)
    assert lines == [
        "dim 1: 2 idempotent matrices, 2 classes so far",
        "dim 2: 11 idempotent matrices, 4 classes so far",
    ]


def test_catalog_needs_a_dimension() -> None:
    with pytest.raises(KTheoryError):
        enumerate_projectives(boolean_semiring(), 0)


def test_presentation_needs_an_idempotent() -> None:
    s = join_odot_reduct(chain(2))
    with pytest.raises(KTheoryError):
        projective_presentation(SqMatrix.of(s, [[HALF]]))


def test_direct_sum_is_block_diagonal() -> None:
    s = boolean_semiring()
    u = SqMatrix.of(s, [[1]])
    v = SqMatrix.of(s, [[1, 0], [1, 1]])
    assert str(direct_sum(u, v)) == "[[1,0,0],[0,1,0],[0,1,1]]"
    assert str(pad(u, 2)) == "[[1,0,0],[0,0,0],[0,0,0]]"
    assert pad(u, 0) is u
    with pytest.raises(KTheoryError):
        direct_sum(u, SqMatrix.of(s, [[1, 0]]))
    with pytest.raises(KTheoryError):
        direct_sum(u, SqMatrix.of(join_odot_reduct(chain(2)), [[1]]))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_padding_preserves_the_class(k: int) -> None:
    s = join_odot_reduct(chain(2))
    assert padding_invariant(SqMatrix.of(s, [[1, 0], [HALF, 0]]), k)


def test_row_space_expressibility_is_sound_but_not_complete() -> None:
    s = boolean_semiring()
    u = SqMatrix.of(s, [[1, 0], [0, 0]])
    same_rows = mutual_expressibility(u, SqMatrix.of(s, [[1, 0], [1, 0]]))
    assert same_rows.expressible
    assert same_rows.isomorphic
    assert same_rows.coincides

    swapped = mutual_expressibility(u, SqMatrix.of(s, [[0, 0], [0, 1]]))
    assert not swapped.expressible
    assert swapped.isomorphic
    assert swapped.sound
    assert not swapped.coincides

    wider = mutual_expressibility(SqMatrix.of(s, [[1]]), u)
    assert wider.expressible is None
    assert wider.isomorphic


def test_submodules_of_the_boolean_plane() -> None:
    subs = submodules_of_free(boolean_semiring(), 2)
    assert [len(m) for m in subs] == [1, 2, 2, 2, 3, 3, 4]


@pytest.mark.parametrize(
    ("semiring", "n"),
    [
        (boolean_semiring(), 1),
        (boolean_semiring(), 2),
        (join_odot_reduct(chain(2)), 1),
        (join_odot_reduct(chain(2)), 2),
    ],
)
def test_retracts_are_the_idempotent_row_modules(semiring, n: int) -> None:
    for m in submodules_of_free(semiring, n):
        agreement = projectivity_agreement(m, n)
        assert agreement.agrees, m.name
        if agreement.witness is not None:
            assert is_isomorphic(projective_presentation(agreement.witness), m)


# ============================================================================
# K0
# ============================================================================


def test_equality_is_decided_within_the_catalog(boolean_k0: K0Group) -> None:
    p = boolean_k0.catalog.classes
    assert boolean_k0.equal(boolean_k0.k(p[1]) + boolean_k0.k(p[1]), boolean_k0.k(p[2]))
    assert boolean_k0.equal(boolean_k0.k(p[3]) - boolean_k0.k(p[3]), K0Element())
    # P1 ⊕ P2 is three-dimensional, so the witness search runs out of catalog.
    assert boolean_k0.equal(boolean_k0.k(p[1]), boolean_k0.k(p[2])) is None


def test_boolean_presentation(boolean_k0: K0Group) -> None:
    pres = boolean_k0.presentation()
    assert pres.generators == [1, 2, 3]
    assert pres.relations == [[2, -1, 0]]
    assert pres.missing == [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
    assert pres.partial
    assert pres.invariants() == (2, [])
    assert pres.structure() == "Z x Z"


def test_k_is_a_monoid_morphism(boolean_k0: K0Group) -> None:
    assert boolean_k0.morphism_failures() == []


@pytest.mark.parametrize("modulus", [2, 3, 4])
def test_universal_property_counts_agree(boolean_k0: K0Group, modulus: int) -> None:
    assert boolean_k0.monoid_morphisms_mod(modulus) == boolean_k0.presentation().hom_count(
        modulus
    )


def test_csv_report(boolean_k0: K0Group) -> None:
    lines = csv_report(boolean_k0).splitlines()
    assert lines[0] == "class_id,dim,representative,sum_table"
    assert lines[1] == "0,1,[[0]],0;1;2;3"
    assert lines[2] == "1,1,[[1]],1;2;-;-"
    assert len(lines) == 5


# ============================================================================
# Functoriality
# ============================================================================


@pytest.fixture(scope="module")
def chain_groups() -> dict[int, K0Group]:
    return {k: K0Group(catalog_for(chain(k), 2)) for k in (1, 2, 4)}


def test_identity_induces_the_identity(chain_groups: dict[int, K0Group]) -> None:
    group = chain_groups[2]
    induced = k0_map(identity(chain(2)), group, group)
    assert induced.sound
    assert induced.class_map == {c.class_id: c.class_id for c in group.catalog.classes}


def test_induced_maps_compose(chain_groups: dict[int, K0Group]) -> None:
    f = MvHomomorphism.build(chain(1), chain(2), {0: 0, 1: 1})
    g = MvHomomorphism.build(chain(2), chain(4), lambda x: x)
    kf = k0_map(f, chain_groups[1], chain_groups[2])
    kg = k0_map(g, chain_groups[2], chain_groups[4])
    kgf = k0_map(f.then(g), chain_groups[1], chain_groups[4])
    assert kf.sound and kg.sound and kgf.sound
    assert None not in kgf.class_map.values()
    assert compose_class_maps(kf, kg) == kgf.class_map
    x = K0Element.of([1, 1], [3])
    assert kgf.apply(x) == kg.apply(kf.apply(x))


def test_projection_splits_the_diagonal() -> None:
    a = chain(2)
    p = product(a, a)
    small, big = K0Group(catalog_for(a, 1)), K0Group(catalog_for(p, 1))
    assert len(big.catalog.classes) == 4
    into = k0_map(diagonal(a, p), small, big)
    back = k0_map(projection(p, 0), big, small)
    assert into.class_map == {0: 0, 1: 3}
    assert back.class_map == {0: 0, 1: 0, 2: 1, 3: 1}
    assert compose_class_maps(into, back) == k0_map(identity(a), small, small).class_map


def test_catalogs_must_match_the_homomorphism(chain_groups: dict[int, K0Group]) -> None:
    with pytest.raises(KTheoryError):
        k0_map(identity(chain(2)), chain_groups[1], chain_groups[2])
