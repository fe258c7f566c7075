"""
Parser for the ASCII formula syntax.

    formula  := unary [ "->" formula ]      (right-associative)
    unary    := "~" unary | atom
    atom     := "x" digits | "(" formula ")"

Whitespace is ignored. Errors carry both the character offset and the
1-based index of the offending token (the end of input counts as one more
token), so "x1 -> -> x2" fails at token 3.
"""

import re
from dataclasses import dataclass

from .formula import Formula, Implies, LogicError, Not, Var

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<op>->|~|\(|\)))")


class FormulaSyntaxError(LogicError):
    """
    A parse error with its location.

    Attributes:
        position: Character offset into the input
        token_index: 1-based index of the offending token
    """

    def __init__(self, message: str, position: int, token_index: int):
        self.position = position
        self.token_index = token_index
        super().__init__(f"{message} at token {token_index} (column {position + 1})")


@dataclass(frozen=True)
class Token:
    kind: str  # "var", "->", "~", "(", ")", or "end"
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    Split text into tokens, ending with an "end" token.

    Raises:
        FormulaSyntaxError: On characters that start no token
    """
    tokens: list[Token] = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            tokens.append(Token("end", "", pos))
            return tokens
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise FormulaSyntaxError(
                f"unknown token {text[pos]!r}", pos, len(tokens) + 1
            )
        if m.group("var"):
            tokens.append(Token("var", m.group("var"), m.start("var")))
        else:
            tokens.append(Token(m.group("op"), m.group("op"), m.start("op")))
        pos = m.end()


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.current.position, self.i + 1)

    def advance(self) -> Token:
        tok = self.current
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.unary()
        if self.current.kind == "->":
            self.advance()
            return Implies(left, self.formula())
        return left

    def unary(self) -> Formula:
        if self.current.kind == "~":
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.current
        if tok.kind == "var":
            self.advance()
            index = int(tok.text[1:])
            if index < 1:
                raise self.error(f"variable {tok.text} must have a positive index")
            return Var(index)
        if tok.kind == "(":
            self.advance()
            inner = self.formula()
            if self.current.kind != ")":
                raise self.error("expected ')'")
            self.advance()
            return inner
        if tok.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def parse_formula(text: str) -> Formula:
    """
    Parse a formula.

    Args:
        text: Formula in the ASCII syntax, e.g. "x1 -> (x2 -> x1)"

    Returns:
        The formula's syntax tree

    Raises:
        FormulaSyntaxError: On empty input, unknown tokens, unbalanced
            parentheses or misplaced operators
    """
    tokens = tokenize(text)
    if tokens[0].kind == "end":
        raise FormulaSyntaxError("empty formula", 0, 1)
    parser = _Parser(tokens)
    result = parser.formula()
    if parser.current.kind != "end":
        raise parser.error(f"unexpected {parser.current.text!r}")
    return result
