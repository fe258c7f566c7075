"""
Rendering of carrier values for reports.

Every number is printed as an exact fraction (p/q) by default. With
decimal=True fractions are rounded to DECIMAL_PLACES and suffixed with "~"
so nobody mistakes them for exact values.
"""

from collections.abc import Sequence
from fractions import Fraction

from mvring.config import DECIMAL_PLACES


def format_fraction(value: Fraction | int, decimal: bool = False) -> str:
    """
    Render a rational number.

    Args:
        value: The number to render
        decimal: Use an approximate decimal instead of p/q

    Returns:
        "1/2", "3", or "0.5000~" when decimal is set
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    if decimal:
        return f"{float(value):.{DECIMAL_PLACES}f}~"
    return f"{value.numerator}/{value.denominator}"


def format_value(value: object, decimal: bool = False) -> str:
    """
    Render a carrier value.

    Fractions and ints go through format_fraction, tuples (elements of
    product algebras, vectors) are rendered component-wise in parentheses,
    and anything else falls back to str().
    """
    if isinstance(value, Fraction | int) and not isinstance(value, bool):
        return format_fraction(value, decimal)
    if isinstance(value, tuple):
        return "(" + ",".join(format_value(v, decimal) for v in value) + ")"
    return str(value)


def format_vector(values: Sequence[object], decimal: bool = False) -> str:
    """Render a sequence as "(v1, v2, ...)"."""
    return "(" + ", ".join(format_value(v, decimal) for v in values) + ")"


def format_table(
    labels: Sequence[str],
    rows: Sequence[Sequence[str]],
    corner: str = "",
) -> str:
    """
    Render a square operation table with aligned columns.

    Args:
        labels: Column and row labels
        rows: rows[i][j] is the rendered entry at (labels[i], labels[j])
        corner: Text placed in the top-left cell (usually the operator)

    Returns:
        The table as a multi-line string
    """
    width = max([len(corner), *(len(s) for s in labels), *(len(c) for r in rows for c in r)])
    lines = [" ".join([corner.rjust(width), "|", *(s.rjust(width) for s in labels)])]
    lines.append("-" * len(lines[0]))
    for label, row in zip(labels, rows, strict=True):
        lines.append(" ".join([label.rjust(width), "|", *(c.rjust(width) for c in row)]))
    return "\n".join(lines)
