"""
Text descriptions of semimodules over an MV-algebra's reducts.

A module file names the reduct and then one construction:

    # the subreduct {0, 1/2} of Chain(2)
    reduct join-odot
    elements 0 1/2

    reduct meet-oplus
    free 2

    quotient 0 1/2 1

`elements` takes a closed subset of the algebra, `free n` builds S^n over
the reduct and `quotient` takes the generators of an ideal I and builds
A/I (always over the join-odot reduct). Without a construction line the
whole algebra is used. Elements are written as the reports print them.
"""

from mvring.algebra import FiniteMvAlgebra, ideal_generated, parse_element

from .constructions import (
    Reduct,
    quotient_semimodule,
    reduct_semimodule,
    reduct_semiring,
    subreduct_semimodule,
)
from .matrix import SemimoduleError
from .module import FiniteSemimodule, free_semimodule


def load_module(text: str, algebra: FiniteMvAlgebra) -> FiniteSemimodule:
    """
    Parse a module description against an algebra.

    Raises:
        SemimoduleError: If the description is malformed
        MvAlgebraError: If an element does not belong to the algebra
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]

    reduct = Reduct.JOIN_ODOT
    construction: tuple[str, list[str]] | None = None
    for line in lines:
        keyword, *args = line.split()
        if keyword == "reduct":
            if len(args) != 1:
                raise SemimoduleError("`reduct` takes exactly one name")
            try:
                reduct = Reduct(args[0])
            except ValueError:
                choices = ", ".join(r.value for r in Reduct)
                raise SemimoduleError(
                    f"unknown reduct {args[0]!r} (expected one of {choices})"
                ) from None
        elif keyword in ("elements", "free", "quotient"):
            if construction is not None:
                raise SemimoduleError("a module description takes one construction")
            construction = (keyword, args)
        else:
            raise SemimoduleError(f"unknown keyword {keyword!r}")

    if construction is None:
        return reduct_semimodule(algebra, reduct)
    keyword, args = construction
    if keyword == "free":
        try:
            (n,) = (int(a) for a in args)
        except ValueError:
            raise SemimoduleError("`free` takes one nonnegative integer") from None
        return free_semimodule(reduct_semiring(algebra, reduct), n)
    values = [parse_element(a, algebra) for a in args]
    if keyword == "elements":
        return subreduct_semimodule(algebra, values, reduct)
    if reduct is not Reduct.JOIN_ODOT:
        raise SemimoduleError("quotients are modules over the join-odot reduct")
    return quotient_semimodule(algebra, ideal_generated(algebra, values))
