"""
Algebra spec strings and the text dump format.

Spec strings name an algebra on the command line:

    chain:K                      the chain {0, 1/K, ..., 1}
    product:<spec>,<spec>[,...]  a direct product; wrap nested products
                                 in parentheses: product:(product:chain:1,chain:1),chain:2
    unit                         the rational unit interval

The dump format describes a finite algebra in a small text file:

    chain 4
    product chain:2,chain:2
    table 3

optionally followed by explicit tables, used to feed corrupted algebras to
the law checker:

    chain 2
    oplus
    0 1 2
    1 2 2
    2 2 2
    star
    2 1 0

Table entries are element indices in canonical order. A `table n` header
has no named carrier: its elements are the integers 0..n-1 and it must be
followed by both tables.
"""

from fractions import Fraction

from mvring.formatting import format_value

from .algebra import (
    FiniteMvAlgebra,
    MvAlgebra,
    MvAlgebraError,
    UnitInterval,
    Value,
    chain,
    product,
)


def _split_top_level(text: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise MvAlgebraError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise MvAlgebraError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return parts


def parse_algebra_spec(spec: str) -> MvAlgebra:
    """
    Build an algebra from a spec string.

    Raises:
        MvAlgebraError: If the spec is malformed
    """
    spec = spec.strip()
    if spec.startswith("(") and spec.endswith(")"):
        return parse_algebra_spec(spec[1:-1])
    if spec == "unit":
        return UnitInterval()
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise MvAlgebraError(f"unknown algebra spec {spec!r} (expected chain:K, product:..., unit)")
    if kind == "chain":
        try:
            k = int(rest)
        except ValueError:
            raise MvAlgebraError(f"chain needs an integer, got {rest!r}") from None
        return chain(k)
    if kind == "product":
        factors = [parse_algebra_spec(p) for p in _split_top_level(rest)]
        finite = []
        for f in factors:
            if not isinstance(f, FiniteMvAlgebra):
                raise MvAlgebraError("products of the unit interval are not supported")
            finite.append(f)
        return product(*finite)
    raise MvAlgebraError(f"unknown algebra kind {kind!r}")


def parse_finite_spec(spec: str) -> FiniteMvAlgebra:
    """
    Like parse_algebra_spec, but reject the unit interval.

    Raises:
        MvAlgebraError: If the spec is malformed or names an infinite algebra
    """
    algebra = parse_algebra_spec(spec)
    if not isinstance(algebra, FiniteMvAlgebra):
        raise MvAlgebraError(f"{spec!r} is infinite; a finite algebra is required here")
    return algebra


def dump_algebra(algebra: FiniteMvAlgebra, tables: bool = False) -> str:
    """
    Render an algebra in the dump format.

    Algebras built from chain/product specs get a named header; anything
    else is dumped as `table n` and always includes its tables.
    """
    name = algebra.name
    if name.startswith("chain:"):
        header = f"chain {name.removeprefix('chain:')}"
    elif name.startswith("product:"):
        header = f"product {name.removeprefix('product:')}"
    else:
        header = f"table {len(algebra)}"
        tables = True

    lines = [header]
    if tables:
        lines.append("oplus")
        lines.extend(" ".join(map(str, row)) for row in algebra.oplus_table)
        lines.append("star")
        lines.append(" ".join(map(str, algebra.star_table)))
    return "\n".join(lines) + "\n"


def load_algebra(text: str) -> FiniteMvAlgebra:
    """
    Parse the dump format.

    Raises:
        MvAlgebraError: If the text is malformed
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MvAlgebraError("empty algebra description")

    kind, _, arg = lines[0].partition(" ")
    if kind == "chain":
        base = parse_finite_spec(f"chain:{arg}")
    elif kind == "product":
        base = parse_finite_spec(f"product:{arg}")
    elif kind == "table":
        try:
            n = int(arg)
        except ValueError:
            raise MvAlgebraError(f"table needs a size, got {arg!r}") from None
        base = None
    else:
        raise MvAlgebraError(f"unknown header {lines[0]!r}")

    body = lines[1:]
    if not body:
        if base is None:
            raise MvAlgebraError("a `table` algebra needs explicit oplus and star tables")
        return base

    size = len(base) if base is not None else n
    try:
        oplus_at = body.index("oplus")
        star_at = body.index("star")
    except ValueError:
        raise MvAlgebraError("tables must contain an `oplus` and a `star` section") from None
    try:
        oplus_rows = [[int(v) for v in row.split()] for row in body[oplus_at + 1 : star_at]]
        star_row = [int(v) for v in body[star_at + 1].split()]
    except (ValueError, IndexError):
        raise MvAlgebraError("table entries must be integers") from None
    if len(oplus_rows) != size:
        raise MvAlgebraError(f"oplus table has {len(oplus_rows)} rows, expected {size}")

    if base is None:
        return FiniteMvAlgebra(f"table:{size}", list(range(size)), oplus_rows, star_row)
    return base.with_tables(oplus_rows, star_row)


def parse_element(token: str, algebra: MvAlgebra) -> Value:
    """
    Parse one carrier element as printed by the reports.

    Chain elements are written as fractions ("1/2"), product elements as
    parenthesized tuples without spaces ("(0,1/2)"). Unit interval elements
    accept anything Fraction() does.

    Raises:
        MvAlgebraError: If the token names no element of the algebra
    """
    token = token.strip()
    if isinstance(algebra, FiniteMvAlgebra):
        for x in algebra.elements:
            if format_value(x) == token:
                return x
        try:
            value = Fraction(token)
        except (ValueError, ZeroDivisionError):
            value = None
        if value is not None and algebra.contains(value):
            return value
        raise MvAlgebraError(f"{token!r} is not an element of {algebra.name}")
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MvAlgebraError(f"{token!r} is not a rational number") from None
    if not algebra.contains(value):
        raise MvAlgebraError(f"{token} is not in {algebra.name}")
    return value


def parse_elements(text: str, algebra: MvAlgebra) -> list[Value]:
    """
    Parse a comma-separated list of elements, e.g. "(0,1),(1/2,0)".

    Commas inside parentheses belong to product elements; empty items are
    skipped.

    Raises:
        MvAlgebraError: On unbalanced parentheses or an unknown element
    """
    return [parse_element(t, algebra) for t in _split_top_level(text) if t.strip()]
