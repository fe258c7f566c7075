"""
Semiring reducts of MV-algebras and MV-semiring recognition.

Every MV-algebra A has two semiring reducts,

    A∨⊙ = <A, ∨, ⊙, 0, 1>    and    A∧⊕ = <A, ∧, ⊕, 1, 0>,

and ∗ is an isomorphism between them. Going back, a commutative idempotent
semiring S is an MV-semiring when some unary map ∗ satisfies

    (i)  ab = 0  iff  b ≤ a∗
    (ii) a ∨ b = (a∗ · (a∗ · b)∗)∗

and then a ⊕ b = (a∗ · b∗)∗ turns S back into an MV-algebra.

Recognition is a brute-force search over unary maps. Condition (i) pins
down a∗ as the largest annihilator of a, so each a has at most one
candidate and the search is nearly free; the size cap still applies since
the candidate lists are computed over all pairs.
"""

import itertools
from dataclasses import dataclass, field

from mvring.algebra import FiniteMvAlgebra, Value
from mvring.config import RECOGNITION_MAX_SIZE, check_cap
from mvring.formatting import format_value

from .table import SemiringError, SemiringMap, SemiringTable


class RecognitionRefused(SemiringError):
    """
    Raised when a negation map is required but none exists.

    Attributes:
        reason: Why recognition failed
        witness: Elements exhibiting the failure
    """

    def __init__(self, reason: str, witness: tuple[Value, ...] = ()):
        self.reason = reason
        self.witness = witness
        shown = ", ".join(format_value(w) for w in witness)
        super().__init__(f"{reason}" + (f" (witness: {shown})" if witness else ""))


def join_odot_reduct(algebra: FiniteMvAlgebra) -> SemiringTable:
    """A∨⊙ = <A, ∨, ⊙, 0, 1>."""
    return SemiringTable(
        f"{algebra.name}[∨⊙]",
        algebra.elements,
        algebra.join_table,
        algebra.odot_table,
        algebra.zero_index,
        algebra.index(algebra.one),
    )


def meet_oplus_reduct(algebra: FiniteMvAlgebra) -> SemiringTable:
    """A∧⊕ = <A, ∧, ⊕, 1, 0>: the semiring zero is 1 and its unit is 0."""
    return SemiringTable(
        f"{algebra.name}[∧⊕]",
        algebra.elements,
        algebra.meet_table,
        algebra.oplus_table,
        algebra.index(algebra.one),
        algebra.zero_index,
    )


@dataclass
class Reducts:
    """
    Both semiring reducts of a finite MV-algebra.

    Attributes:
        algebra: The source algebra
        join_odot: A∨⊙
        meet_oplus: A∧⊕
        star_problem: Why ∗ fails to be an isomorphism A∨⊙ -> A∧⊕, or None
    """

    algebra: FiniteMvAlgebra
    join_odot: SemiringTable
    meet_oplus: SemiringTable
    star_problem: str | None

    @property
    def star_is_isomorphism(self) -> bool:
        return self.star_problem is None


def reducts(algebra: FiniteMvAlgebra) -> Reducts:
    """
    Build A∨⊙ and A∧⊕ and check that ∗ is an isomorphism between them.

    Raises:
        SemiringError: If a reduct fails the semiring laws (only possible
            for algebras whose tables break the MV axioms)
    """
    jo = join_odot_reduct(algebra)
    mo = meet_oplus_reduct(algebra)
    star = SemiringMap(jo, mo, tuple((x, algebra.star(x)) for x in algebra.elements))
    problem = star.violation()
    if problem is None and len(set(star.table.values())) != len(algebra):
        problem = "∗ is not a bijection"
    return Reducts(algebra, jo, mo, problem)


@dataclass
class Recognition:
    """
    Result of searching for a negation map on a semiring.

    Attributes:
        semiring: The semiring searched
        star: The negation map found, or None
        reason: Why no map was found
        witness: Elements exhibiting the failure
        candidates: Per-element candidate values surviving condition (i)
        maps_tried: Number of complete maps tested against condition (ii)
    """

    semiring: SemiringTable
    star: dict[Value, Value] | None
    reason: str | None = None
    witness: tuple[Value, ...] = ()
    candidates: dict[Value, list[Value]] = field(default_factory=dict)
    maps_tried: int = 0

    @property
    def recognized(self) -> bool:
        return self.star is not None

    def require(self) -> dict[Value, Value]:
        """
        Return the negation map or raise.

        Raises:
            RecognitionRefused: If recognition failed
        """
        if self.star is None:
            raise RecognitionRefused(self.reason or "not an MV-semiring", self.witness)
        return self.star


def _condition_ii_witness(s: SemiringTable, star: dict[Value, Value]) -> tuple | None:
    # b varies slowest, so the first witness has the smallest b.
    for b in s.elements:
        for a in s.elements:
            rhs = star[s.mul(star[a], star[s.mul(star[a], b)])]
            if s.join(a, b) != rhs:
                return (a, b)
    return None


def recognize_mv_semiring(s: SemiringTable) -> Recognition:
    """
    Search for a negation map making s an MV-semiring.

    Candidates for each a∗ are filtered by condition (i); the surviving maps
    are tried in canonical order against condition (ii) and the first one
    that passes is returned.

    Raises:
        CapExceeded: If |S| > RECOGNITION_MAX_SIZE
    """
    check_cap("RECOGNITION_MAX_SIZE", len(s), RECOGNITION_MAX_SIZE)
    if not s.is_commutative:
        a, b = next(
            (x, y) for x in s.elements for y in s.elements if s.mul(x, y) != s.mul(y, x)
        )
        return Recognition(s, None, "multiplication is not commutative", (a, b))

    candidates: dict[Value, list[Value]] = {}
    for a in s.elements:
        candidates[a] = [
            c
            for c in s.elements
            if all((s.mul(a, b) == s.zero) == s.leq(b, c) for b in s.elements)
        ]
        if not candidates[a]:
            return Recognition(
                s, None, "no map satisfies condition (i)", (a,), candidates
            )

    first_witness: tuple = ()
    tried = 0
    for choice in itertools.product(*(candidates[a] for a in s.elements)):
        tried += 1
        star = dict(zip(s.elements, choice, strict=True))
        witness = _condition_ii_witness(s, star)
        if witness is None:
            return Recognition(s, star, candidates=candidates, maps_tried=tried)
        if not first_witness:
            first_witness = witness
    return Recognition(
        s, None, "condition (i) holds but (ii) fails", first_witness, candidates, tried
    )


def reconstruct_mv(s: SemiringTable, star: dict[Value, Value]) -> FiniteMvAlgebra:
    """
    The MV-algebra <S, ⊕, ∗, 0> with a ⊕ b = (a∗ · b∗)∗.

    Raises:
        SemiringError: If star does not cover the carrier
    """
    if set(star) != set(s.elements):
        raise SemiringError("negation map must be defined on every element")
    e = s.elements
    oplus_table = [[s.index(star[s.mul(star[a], star[b])]) for b in e] for a in e]
    star_table = [s.index(star[a]) for a in e]
    return FiniteMvAlgebra(f"mv({s.name})", e, oplus_table, star_table, s.zero_index)
