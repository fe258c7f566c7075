from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvring.algebra import UnitInterval
from mvring.config import CapExceeded
from mvring.logic import (
    AXIOM_SCHEMES,
    FormulaSyntaxError,
    Implies,
    LogicError,
    Not,
    Oplus,
    Star,
    Var,
    evaluate,
    format_formula,
    format_term,
    instantiate,
    is_tautology_on_chain,
    parse_formula,
    size,
    tokenize,
    translate_tau,
    variables,
)

HALF = Fraction(1, 2)


def test_implication_is_right_associative() -> None:
    f = parse_formula("x1 -> x2 -> x1")
    assert f == Implies(Var(1), Implies(Var(2), Var(1)))
    assert format_formula(f) == "x1 -> x2 -> x1"


def test_parentheses_survive_only_where_needed() -> None:
    assert format_formula(parse_formula("(x1 -> x2) -> x1")) == "(x1 -> x2) -> x1"
    assert format_formula(parse_formula("x1 -> (x2 -> x1)")) == "x1 -> x2 -> x1"
    assert format_formula(parse_formula("~(x1 -> x2)")) == "~(x1 -> x2)"
    assert parse_formula(" ~ ~x1 ") == Not(Not(Var(1)))


def test_tokens_carry_positions() -> None:
    kinds = [(t.kind, t.position) for t in tokenize("~x12->x3")]
    assert kinds == [("~", 0), ("var", 1), ("->", 4), ("var", 6), ("end", 8)]


@pytest.mark.parametrize(
    ("text", "token_index", "position"),
    [
        ("x1 -> -> x2", 3, 6),
        ("", 1, 0),
        ("(x1", 3, 3),
        ("x1 & x2", 2, 3),
        ("x1 x2", 2, 3),
        ("x0", 1, 0),
    ],
)
def test_syntax_errors_report_their_location(text: str, token_index: int, position: int) -> None:
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse_formula(text)
    assert excinfo.value.token_index == token_index
    assert excinfo.value.position == position
    assert f"at token {token_index}" in str(excinfo.value)


def test_variables_and_size() -> None:
    f = parse_formula("x2 -> (x1 -> x2)")
    assert variables(f) == (1, 2)
    assert size(f) == 5


def test_var_index_must_be_positive() -> None:
    with pytest.raises(LogicError):
        Var(0)


def test_tau_translation() -> None:
    term = translate_tau(parse_formula("~x1 -> x2"))
    assert term == Oplus(Star(Star(Var(1))), Var(2))
    assert format_term(term) == "x1** ⊕ x2"
    assert format_term(Star(Oplus(Var(1), Oplus(Var(2), Var(3))))) == "(x1 ⊕ (x2 ⊕ x3))*"


# ============================================================================
# Validity on chains
# ============================================================================


@pytest.mark.parametrize("scheme", sorted(AXIOM_SCHEMES))
@pytest.mark.parametrize("k", range(1, 11))
def test_axiom_schemes_are_tautologies(scheme: str, k: int) -> None:
    f = instantiate(scheme, Var(1))
    result = is_tautology_on_chain(f, k)
    assert result.valid
    assert result.counterexample is None
    assert result.checked == (k + 1) ** len(variables(f))


def test_unknown_scheme() -> None:
    with pytest.raises(LogicError):
        instantiate("Ł9", Var(1))


def test_boolean_tautology_fails_on_a_longer_chain() -> None:
    f = parse_formula("(~x1 -> x1) -> x1")
    assert is_tautology_on_chain(f, 1).valid

    result = is_tautology_on_chain(f, 2)
    assert not result.valid
    assert result.counterexample == {1: HALF}
    assert result.value == HALF
    assert result.checked == 2


def test_counterexample_is_the_first_in_canonical_order() -> None:
    result = is_tautology_on_chain(parse_formula("x1 -> x2"), 3)
    assert result.counterexample == {1: Fraction(1, 3), 2: 0}
    assert result.value == Fraction(2, 3)


def test_chain_parameter_must_be_positive() -> None:
    with pytest.raises(LogicError):
        is_tautology_on_chain(parse_formula("x1"), 0)


def test_assignment_cap() -> None:
    f = parse_formula(" -> ".join(f"x{i}" for i in range(1, 9)))
    with pytest.raises(CapExceeded) as excinfo:
        is_tautology_on_chain(f, 9)
    assert excinfo.value.cap == "TAUTOLOGY_MAX_ASSIGNMENTS"
    assert excinfo.value.requested == 10**8


def test_evaluate_needs_every_variable() -> None:
    with pytest.raises(LogicError):
        evaluate(translate_tau(parse_formula("x1 -> x2")), {1: HALF}, UnitInterval())


@given(
    st.fractions(min_value=0, max_value=1, max_denominator=40),
    st.fractions(min_value=0, max_value=1, max_denominator=40),
)
def test_implication_is_lukasiewicz_residuum(x: Fraction, y: Fraction) -> None:
    term = translate_tau(parse_formula("x1 -> x2"))
    assert evaluate(term, {1: x, 2: y}, UnitInterval()) == min(Fraction(1), 1 - x + y)


formulas = st.recursive(
    st.integers(min_value=1, max_value=3).map(Var),
    lambda children: st.one_of(
        children.map(Not),
        st.tuples(children, children).map(lambda pair: Implies(*pair)),
    ),
    max_leaves=8,
)


@settings(max_examples=1000, deadline=None)
@given(formulas)
def test_printing_and_parsing_round_trip(f) -> None:
    assert parse_formula(format_formula(f)) == f


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(AXIOM_SCHEMES)), formulas, formulas, formulas)
def test_axiom_instances_are_valid(scheme: str, phi, psi, chi) -> None:
    assert is_tautology_on_chain(instantiate(scheme, phi, psi, chi), 3).valid


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(sorted(AXIOM_SCHEMES)), formulas, formulas)
def test_modus_ponens_preserves_validity(scheme: str, phi, psi) -> None:
    premise = instantiate(scheme, phi)
    assert is_tautology_on_chain(Implies(premise, psi), 2).valid == (
        is_tautology_on_chain(psi, 2).valid
    )
