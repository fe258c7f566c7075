"""
The Grothendieck group K0 and the maps induced by MV-homomorphisms.

K0(S) is the group completion of the monoid of projective classes under
⊕: formal differences [P] - [Q], with

    [P] - [Q] = [P'] - [Q']   iff   P ⊕ Q' ⊕ R ≅ P' ⊕ Q ⊕ R for some R.

R is searched among the catalogued classes only, so equality is decided
within the dimension cap and reported as unresolved when a needed sum
falls outside the catalog.

The presentation is the free abelian group on the nonzero classes modulo
[P] + [Q] - [P ⊕ Q]. Its structure comes from the diagonal of an integer
Smith normal form of the relation matrix.
"""

import csv
import io
import itertools
import math
from collections import Counter
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from mvring.algebra import FiniteMvAlgebra, MvHomomorphism
from mvring.config import HOM_MAX_CANDIDATES, check_cap
from mvring.semimodule import idempotent_scan, is_idempotent
from mvring.semiring import join_odot_reduct

from .projectives import KTheoryError, ProjClass, ProjectiveCatalog, enumerate_projectives

# ============================================================================
# Formal differences
# ============================================================================


def _multiset(ids: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(i for i in ids if i != 0))


@dataclass(frozen=True)
class K0Element:
    """
    A formal difference [P_1] + ... - [Q_1] - ..., stored by class id.

    The zero class is dropped and common terms are cancelled on
    construction, so syntactic equality implies equality in K0.

    Attributes:
        positive: Sorted class ids with multiplicity
        negative: Sorted class ids with multiplicity
    """

    positive: tuple[int, ...] = ()
    negative: tuple[int, ...] = ()

    @classmethod
    def of(cls, positive: Iterable[int] = (), negative: Iterable[int] = ()) -> "K0Element":
        pos, neg = Counter(_multiset(positive)), Counter(_multiset(negative))
        common = pos & neg
        return cls(
            tuple(sorted((pos - common).elements())),
            tuple(sorted((neg - common).elements())),
        )

    def __add__(self, other: "K0Element") -> "K0Element":
        return K0Element.of(self.positive + other.positive, self.negative + other.negative)

    def __neg__(self) -> "K0Element":
        return K0Element(self.negative, self.positive)

    def __sub__(self, other: "K0Element") -> "K0Element":
        return self + (-other)

    @property
    def is_identity(self) -> bool:
        return not self.positive and not self.negative

    def __str__(self) -> str:
        terms = [f"+ [P{i}]" for i in self.positive] + [f"- [P{i}]" for i in self.negative]
        if not terms:
            return "0"
        return " ".join(terms).removeprefix("+ ")


# ============================================================================
# Smith normal form
# ============================================================================


def smith_diagonal(rows: list[list[int]], n_cols: int) -> list[int]:
    """
    Nonzero diagonal entries of the Smith normal form of an integer matrix.

    Each entry divides the next.
    """
    a = [list(r) for r in rows]
    m = len(a)
    diag: list[int] = []
    t = 0
    while t < min(m, n_cols):
        pivots = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n_cols) if a[i][j]]
        if not pivots:
            break
        _, pi, pj = min(pivots)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]

        settled = False
        while not settled:
            settled = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t], strict=True)]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    settled = False
                    break
            if not settled:
                continue
            for j in range(t + 1, n_cols):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    settled = False
                    break
            if not settled:
                continue
            p = a[t][t]
            for i in range(t + 1, m):
                if any(a[i][j] % p for j in range(t + 1, n_cols)):
                    a[t] = [x + y for x, y in zip(a[t], a[i], strict=True)]
                    settled = False
                    break
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def describe_group(free_rank: int, torsion: Iterable[int]) -> str:
    """Render Z^r ⊕ C_d1 ⊕ ... as "Z x Z x C2", or "trivial"."""
    parts = ["Z"] * free_rank + [f"C{d}" for d in torsion]
    return " x ".join(parts) if parts else "trivial"


# ============================================================================
# The group
# ============================================================================


@dataclass
class K0Presentation:
    """
    Generators and relations of K0 within the catalog.

    Attributes:
        generators: Nonzero class ids, one generator each
        relations: Rows [P] + [Q] - [P ⊕ Q] over the generators
        missing: Pairs (P, Q) whose sum is outside the catalog
    """

    generators: list[int]
    relations: list[list[int]]
    missing: list[tuple[int, int]] = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return bool(self.missing)

    def invariants(self) -> tuple[int, list[int]]:
        """(free rank, torsion invariant factors > 1)."""
        diag = smith_diagonal(self.relations, len(self.generators))
        return len(self.generators) - len(diag), [d for d in diag if d > 1]

    def structure(self) -> str:
        free_rank, torsion = self.invariants()
        return describe_group(free_rank, torsion)

    def hom_count(self, modulus: int) -> int:
        """|Hom(K0, Z/m)| predicted from the invariant factors."""
        free_rank, torsion = self.invariants()
        return modulus**free_rank * math.prod(math.gcd(d, modulus) for d in torsion)


class K0Group:
    """
    K0 of the semiring behind a projective catalog.

    Usage:
        k0 = K0Group(enumerate_projectives(boolean_semiring(), 2))
        k0.presentation().structure()   # e.g. "Z x Z"
    """

    def __init__(self, catalog: ProjectiveCatalog):
        self.catalog = catalog
        self._sums: dict[tuple[int, int], int | None] = {}

    def sum_id(self, p: int, q: int) -> int | None:
        """Class id of P ⊕ Q, cached; None outside the catalog."""
        key = (min(p, q), max(p, q))
        if key not in self._sums:
            classes = self.catalog.classes
            c = self.catalog.sum(classes[key[0]], classes[key[1]])
            self._sums[key] = None if c is None else c.class_id
        return self._sums[key]

    def fold(self, ids: Iterable[int]) -> int | None:
        """Class id of the direct sum of several classes."""
        acc = 0
        for i in ids:
            acc = self.sum_id(acc, i)
            if acc is None:
                return None
        return acc

    def k(self, c: ProjClass) -> K0Element:
        """k_S: [P] ↦ [P] - 0."""
        return K0Element.of([c.class_id])

    def equal(self, x: K0Element, y: K0Element) -> bool | None:
        """
        Decide x = y within the catalog.

        Returns True when some catalogued R witnesses equality, False when
        every R was tried with all sums catalogued and none did, and None
        when a needed sum fell outside the catalog.
        """
        left = x.positive + y.negative
        right = y.positive + x.negative
        if sorted(left) == sorted(right):
            return True
        unresolved = False
        for r in self.catalog.classes:
            a, b = self.fold((*left, r.class_id)), self.fold((*right, r.class_id))
            if a is None or b is None:
                unresolved = True
            elif a == b:
                return True
        return None if unresolved else False

    def presentation(self) -> K0Presentation:
        ids = [c.class_id for c in self.catalog.classes if c.class_id != 0]
        position = {cid: i for i, cid in enumerate(ids)}
        pres = K0Presentation(ids, [])
        for p, q in itertools.combinations_with_replacement(ids, 2):
            s = self.sum_id(p, q)
            if s is None:
                pres.missing.append((p, q))
                continue
            row = [0] * len(ids)
            row[position[p]] += 1
            row[position[q]] += 1
            if s != 0:
                row[position[s]] -= 1
            if any(row):
                pres.relations.append(row)
        return pres

    def morphism_failures(self) -> list[tuple[int, int]]:
        """Pairs with k(P) + k(Q) != k(P ⊕ Q) (catalogued sums only)."""
        classes = self.catalog.classes
        failures = []
        for p, q in itertools.combinations_with_replacement(classes, 2):
            s = self.sum_id(p.class_id, q.class_id)
            if s is None:
                continue
            if self.equal(self.k(p) + self.k(q), self.k(classes[s])) is not True:
                failures.append((p.class_id, q.class_id))
        return failures

    def monoid_morphisms_mod(self, modulus: int) -> int:
        """
        Count monoid morphisms from the catalogued class monoid to Z/m.

        Each one factors uniquely through k_S, so the count must equal
        K0Presentation.hom_count(m).

        Raises:
            CapExceeded: If m^(number of generators) exceeds HOM_MAX_CANDIDATES
        """
        pres = self.presentation()
        n = len(pres.generators)
        check_cap("HOM_MAX_CANDIDATES", modulus**n, HOM_MAX_CANDIDATES)
        return sum(
            1
            for values in itertools.product(range(modulus), repeat=n)
            if all(
                sum(c * v for c, v in zip(row, values, strict=True)) % modulus == 0
                for row in pres.relations
            )
        )


def catalog_for(
    algebra: FiniteMvAlgebra,
    max_dim: int,
    progress: Callable[[str], None] | None = None,
) -> ProjectiveCatalog:
    """Projective classes over the join-odot reduct of an algebra."""
    return enumerate_projectives(join_odot_reduct(algebra), max_dim, progress)


# ============================================================================
# Induced maps
# ============================================================================


@dataclass
class K0Map:
    """
    The map induced by an MV-homomorphism on projective classes.

    Attributes:
        hom: f: A -> B
        class_map: Source class id -> target class id (None outside the
            target catalog)
        non_idempotent: Source representatives whose image matrix is not
            idempotent
        ill_defined: Source matrices whose image class differs from the
            image of their class representative
        monoid_failures: Pairs (P, Q) with f(P ⊕ Q) != f(P) ⊕ f(Q)
    """

    hom: MvHomomorphism
    class_map: dict[int, int | None]
    non_idempotent: list[int] = field(default_factory=list)
    ill_defined: list[str] = field(default_factory=list)
    monoid_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        return not (self.non_idempotent or self.ill_defined or self.monoid_failures)

    def apply(self, x: K0Element) -> K0Element | None:
        """The induced group map on a formal difference."""
        pos = [self.class_map[i] for i in x.positive]
        neg = [self.class_map[i] for i in x.negative]
        if None in pos or None in neg:
            return None
        return K0Element.of(pos, neg)  # type: ignore[arg-type]


def k0_map(f: MvHomomorphism, source: K0Group, target: K0Group) -> K0Map:
    """
    [A·(u_ij)] ↦ [B·(f(u_ij))] on every catalogued class.

    Well-definedness is checked by pushing every scanned idempotent matrix
    through f, not only the class representatives.

    Raises:
        KTheoryError: If the catalogs are not over the reducts of f's algebras
    """
    s, t = source.catalog.semiring, target.catalog.semiring
    if s.elements != f.source.elements or t.elements != f.target.elements:
        raise KTheoryError("catalogs do not match the homomorphism's algebras")
    table = f.table
    result = K0Map(f, {})
    for c in source.catalog.classes:
        image = c.representative.map_entries(table.__getitem__, t)
        if not is_idempotent(image):
            result.non_idempotent.append(c.class_id)
            result.class_map[c.class_id] = None
            continue
        found = target.catalog.classify(image)
        result.class_map[c.class_id] = None if found is None else found.class_id

    for n in range(1, source.catalog.max_dim + 1):
        for u in idempotent_scan(s, n):
            src = source.catalog.classify(u)
            image = u.map_entries(table.__getitem__, t)
            if src is None or not is_idempotent(image):
                continue
            img = target.catalog.classify(image)
            expected = result.class_map[src.class_id]
            if img is not None and expected is not None and img.class_id != expected:
                result.ill_defined.append(str(u))

    classes = source.catalog.classes
    for p, q in itertools.combinations_with_replacement(classes, 2):
        pq = source.sum_id(p.class_id, q.class_id)
        fp, fq = result.class_map[p.class_id], result.class_map[q.class_id]
        if pq is None or fp is None or fq is None or result.class_map[pq] is None:
            continue
        if target.sum_id(fp, fq) != result.class_map[pq]:
            result.monoid_failures.append((p.class_id, q.class_id))
    return result


def compose_class_maps(first: K0Map, second: K0Map) -> dict[int, int | None]:
    """second ∘ first on class ids."""
    return {
        i: (None if j is None else second.class_map.get(j)) for i, j in first.class_map.items()
    }


# ============================================================================
# Reports
# ============================================================================


def csv_report(group: K0Group) -> str:
    """
    One row per class: class id, dim, representative, sum table.

    The sum table lists the class of P ⊕ Q for every Q in catalog order,
    separated by ";", with "-" for sums outside the catalog.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["class_id", "dim", "representative", "sum_table"])
    for p in group.catalog.classes:
        sums = [group.sum_id(p.class_id, q.class_id) for q in group.catalog.classes]
        writer.writerow(
            [
                p.class_id,
                p.dim,
                str(p.representative),
                ";".join("-" if s is None else str(s) for s in sums),
            ]
        )
    return buffer.getvalue()
