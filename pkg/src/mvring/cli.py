"""
Command-line interface for mvring.

This module defines all CLI commands using the Typer library.

Exit codes: 0 when a command succeeds or a check passes, 1 when a check
fails (falsified formula, broken law, failed isomorphism, non-strong
module, lossy second pass), 2 for usage errors and unreadable input.
"""

from collections.abc import Callable
from pathlib import Path
from typing import Annotated, NoReturn

import typer

from mvring import __version__
from mvring.config import CapExceeded, RunConfig

app = typer.Typer(
    name="mvring",
    help="mvring - MV-algebras as idempotent semirings",
    no_args_is_help=True,
)

AlgebraOption = Annotated[
    str,
    typer.Option(
        "--algebra",
        "-a",
        help="Algebra spec: chain:K, product:<spec>,<spec> or unit",
    ),
]


def version_callback(value: bool) -> None:
    """Show version and exit."""
    if value:
        typer.echo(f"mvring {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: Annotated[
        bool | None,
        typer.Option("--version", "-v", callback=version_callback, is_eager=True),
    ] = None,
    decimal: Annotated[
        bool, typer.Option("--decimal", help="Print approximate decimals instead of p/q")
    ] = False,
    threads: Annotated[int, typer.Option("--threads", min=1, help="Worker threads")] = 1,
    seed: Annotated[int, typer.Option("--seed", help="Seed for random trials")] = 0,
    verbose: Annotated[
        bool, typer.Option("--verbose", help="Progress lines on stderr")
    ] = False,
) -> None:
    """mvring - MV-algebras as idempotent semirings."""
    ctx.obj = RunConfig(decimal=decimal, threads=threads, seed=seed, verbose=verbose)


# ============================================================================
# Helpers
# ============================================================================


def _config(ctx: typer.Context) -> RunConfig:
    obj = ctx.find_root().obj
    return obj if isinstance(obj, RunConfig) else RunConfig()


def _fail(message: str, code: int = 2) -> NoReturn:
    typer.echo(f"Error: {message}", err=True)
    raise typer.Exit(code=code)


def _progress(cfg: RunConfig) -> Callable[[str], None] | None:
    if not cfg.verbose:
        return None
    return lambda message: typer.echo(message, err=True)


def _header(title: str) -> None:
    typer.echo(title)
    typer.echo("=" * 60)


def _section(title: str) -> None:
    typer.echo()
    typer.echo(title)
    typer.echo("-" * 60)


def _verdict(ok: bool, passed: str, failed: str) -> None:
    typer.echo()
    typer.echo(passed if ok else failed)
    if not ok:
        raise typer.Exit(code=1)


def _algebra(spec: str):
    from mvring.algebra import MvAlgebraError, parse_algebra_spec

    try:
        return parse_algebra_spec(spec)
    except MvAlgebraError as e:
        _fail(str(e))


def _finite(spec: str):
    from mvring.algebra import MvAlgebraError, parse_finite_spec

    try:
        return parse_finite_spec(spec)
    except MvAlgebraError as e:
        _fail(str(e))


def _dims(text: str, option: str) -> tuple[int, int]:
    rows, sep, cols = text.lower().partition("x")
    try:
        if not sep:
            raise ValueError
        return int(rows), int(cols)
    except ValueError:
        _fail(f"{option} expects ROWSxCOLS, got {text!r}")


# ============================================================================
# mv
# ============================================================================

mv_app = typer.Typer(help="MV-algebra and semiring commands", no_args_is_help=True)
app.add_typer(mv_app, name="mv")


@mv_app.command("axioms")
def mv_axioms(
    ctx: typer.Context,
    algebra: AlgebraOption,
    grid: Annotated[int, typer.Option("--grid", help="Grid resolution for unit")] = 10,
) -> None:
    """
    Check the MV axioms and derived properties.

    Finite algebras are checked exhaustively; the unit interval is checked on
    the grid {0, 1/q, ..., 1}.
    """
    from mvring.algebra import check_axioms
    from mvring.formatting import format_vector

    cfg = _config(ctx)
    a = _algebra(algebra)
    report = check_axioms(a, grid=grid)
    scope = "exhaustive" if report.exhaustive else f"grid of {report.sample_size} values"
    _header(f"Laws of {report.algebra} ({scope})")
    for r in report.results:
        status = "pass" if r.passed else "FAIL"
        typer.echo(f"{r.law.name:<10} {status:<5} {r.law.statement}")
        if r.witness is not None:
            typer.echo(f"  └─ witness {format_vector(r.witness, cfg.decimal)}")
    _verdict(report.all_passed, "all laws pass", f"{len(report.failures)} law(s) fail")


@mv_app.command("ops")
def mv_ops(
    ctx: typer.Context,
    algebra: AlgebraOption,
    x: Annotated[str, typer.Argument(help="First element, e.g. 1/2")],
    y: Annotated[str, typer.Argument(help="Second element")],
) -> None:
    """Evaluate every primitive and derived operation on two elements."""
    from mvring.algebra import MvAlgebraError, parse_element
    from mvring.formatting import format_value

    cfg = _config(ctx)
    a = _algebra(algebra)
    try:
        u, v = parse_element(x, a), parse_element(y, a)
    except MvAlgebraError as e:
        _fail(str(e))

    def show(value) -> str:
        return format_value(value, cfg.decimal)

    fx, fy = show(u), show(v)
    rows = [
        (f"{fx} ⊕ {fy}", a.oplus(u, v)),
        (f"{fx}∗", a.star(u)),
        (f"{fy}∗", a.star(v)),
        (f"{fx} ⊙ {fy}", a.odot(u, v)),
        (f"{fx} ⊖ {fy}", a.ominus(u, v)),
        (f"{fx} → {fy}", a.arrow(u, v)),
        (f"{fx} ∨ {fy}", a.join(u, v)),
        (f"{fx} ∧ {fy}", a.meet(u, v)),
        (f"d({fx}, {fy})", a.distance(u, v)),
    ]
    _header(f"Operations in {a.name}")
    width = max(len(label) for label, _ in rows)
    for label, value in rows:
        typer.echo(f"{label:<{width}}  {show(value)}")
    typer.echo(f"{fx} ≤ {fy}".ljust(width) + f"  {a.leq(u, v)}")


@mv_app.command("center")
def mv_center(ctx: typer.Context, algebra: AlgebraOption) -> None:
    """List the Boolean center {a | a ⊕ a = a}."""
    from mvring.algebra import boolean_center
    from mvring.formatting import format_vector

    a = _finite(algebra)
    center = boolean_center(a)
    _header(f"Boolean center of {a.name}")
    typer.echo(f"{len(center)} element(s): {format_vector(center, _config(ctx).decimal)}")


@mv_app.command("ideals")
def mv_ideals(ctx: typer.Context, algebra: AlgebraOption) -> None:
    """List every ideal, marking the prime and maximal ones."""
    from mvring.algebra import spectra

    cfg = _config(ctx)
    a = _finite(algebra)
    spec = spectra(a)
    _header(f"Ideals of {a.name}")
    for ideal in spec.ideals:
        flags = []
        if ideal in spec.primes:
            flags.append("prime")
        if ideal in spec.maximal:
            flags.append("maximal")
        if not ideal.is_proper:
            flags.append("improper")
        suffix = f"  ({', '.join(flags)})" if flags else ""
        typer.echo(f"{ideal.describe(cfg.decimal)}{suffix}")
    typer.echo()
    typer.echo(f"{len(spec.ideals)} ideal(s)")


@mv_app.command("spec")
def mv_spec(
    ctx: typer.Context,
    algebra: AlgebraOption,
    which: Annotated[str, typer.Option("--which", help="mv or semiring")] = "mv",
) -> None:
    """
    Print the prime spectrum and its basis U(a).

    --which mv uses MV ideals; --which semiring uses the ideals of A∨⊙.
    """
    from mvring.algebra import spectra
    from mvring.formatting import format_value
    from mvring.semiring import join_odot_reduct, r_spec

    cfg = _config(ctx)
    a = _finite(algebra)
    if which == "mv":
        spec = spectra(a)
        primes, maximal, basis = spec.primes, spec.maximal, spec.basis
        title = f"MV-Spec {a.name}"
    elif which == "semiring":
        rs = r_spec(join_odot_reduct(a))
        primes, maximal, basis = rs.primes, rs.maximal, rs.basis
        title = f"R-Spec {a.name}[∨⊙]"
    else:
        _fail(f"--which must be mv or semiring, got {which!r}")

    _header(title)
    for i, p in enumerate(primes):
        mark = "  (maximal)" if p in maximal else ""
        typer.echo(f"P{i}  {p.describe(cfg.decimal)}{mark}")
    if which == "mv":
        _section("Radical")
        radical = [format_value(x, cfg.decimal) for x in a.elements if x in spec.radical]
        typer.echo("{" + ", ".join(radical) + "}")
        typer.echo(f"semisimple  {spec.is_semisimple}")
        typer.echo(f"simple      {spec.is_simple}")
    _section("Basis U(a)")
    for x, opens in basis.items():
        shown = ", ".join(f"P{i}" for i in opens)
        typer.echo(f"U({format_value(x, cfg.decimal)}) = {{{shown}}}")


@mv_app.command("quotient")
def mv_quotient(
    ctx: typer.Context,
    algebra: AlgebraOption,
    seed_elements: Annotated[
        str, typer.Option("--seed-elements", help="Comma-separated ideal generators")
    ],
) -> None:
    """Build A/I for the ideal generated by the seed elements."""
    from mvring.algebra import MvAlgebraError, ideal_generated, parse_elements, quotient
    from mvring.formatting import format_value, format_vector

    cfg = _config(ctx)
    a = _finite(algebra)
    try:
        seeds = parse_elements(seed_elements, a)
    except MvAlgebraError as e:
        _fail(str(e))
    ideal = ideal_generated(a, seeds)
    q = quotient(a, ideal)

    _header(f"{a.name} / {ideal.describe(cfg.decimal)}")
    typer.echo(f"{len(q.algebra)} class(es)")
    for rep, members in q.classes().items():
        typer.echo(f"[{format_value(rep, cfg.decimal)}] = {format_vector(members, cfg.decimal)}")
    _verdict(
        q.classes_described,
        "classes match {(a ⊕ b) ⊙ c∗ | b, c ∈ I}",
        "class description fails",
    )


@mv_app.command("reduct")
def mv_reduct(ctx: typer.Context, algebra: AlgebraOption) -> None:
    """Print the tables of A∨⊙ and A∧⊕ and check that ∗ swaps them."""
    from mvring.formatting import format_table
    from mvring.semiring import SemiringError, reducts

    cfg = _config(ctx)
    a = _finite(algebra)
    try:
        r = reducts(a)
    except SemiringError as e:
        _fail(str(e), code=1)

    _header(f"Semiring reducts of {a.name}")
    for table, plus, times in ((r.join_odot, "∨", "⊙"), (r.meet_oplus, "∧", "⊕")):
        labels = [table.label(x, cfg.decimal) for x in table.elements]
        for op, symbol in ((table.join_table, plus), (table.mul_table, times)):
            _section(f"{table.name}: {symbol}")
            typer.echo(format_table(labels, [[labels[j] for j in row] for row in op], symbol))
    _verdict(
        r.star_is_isomorphism,
        "∗ is an isomorphism A∨⊙ -> A∧⊕",
        f"∗ is not an isomorphism: {r.star_problem}",
    )


@mv_app.command("recognize")
def mv_recognize(ctx: typer.Context, algebra: AlgebraOption) -> None:
    """Recover ∗ from A∨⊙ alone and rebuild the MV-algebra."""
    from mvring.formatting import format_value
    from mvring.semiring import join_odot_reduct, recognize_mv_semiring, reconstruct_mv

    cfg = _config(ctx)
    a = _finite(algebra)
    s = join_odot_reduct(a)
    try:
        rec = recognize_mv_semiring(s)
    except CapExceeded as e:
        _fail(str(e))

    _header(f"MV-semiring recognition on {s.name}")
    typer.echo(f"maps tried  {rec.maps_tried}")
    if rec.star is None:
        witness = ", ".join(format_value(w, cfg.decimal) for w in rec.witness)
        typer.echo(f"refused     {rec.reason}")
        typer.echo(f"  └─ witness ({witness})")
        raise typer.Exit(code=1)
    for x in s.elements:
        typer.echo(f"{format_value(x, cfg.decimal)}∗ = {format_value(rec.star[x], cfg.decimal)}")
    rebuilt = reconstruct_mv(s, rec.star)
    same = rebuilt.oplus_table == a.oplus_table and rebuilt.star_table == a.star_table
    _verdict(same, "reconstruction reproduces ⊕ and ∗", "reconstruction differs from A")


@mv_app.command("gamma")
def mv_gamma(
    unit: Annotated[int, typer.Option("--unit", "-u", min=1, help="Strong unit u")],
    evaluate: Annotated[
        list[str] | None, typer.Option("--eval", help="Evaluate γ at an integer or top")
    ] = None,
) -> None:
    """Truncate the min-plus semifield at u and check γ."""
    from mvring.algebra import chain
    from mvring.semiring import (
        SemiringError,
        check_gamma,
        check_semifield_laws,
        gamma_truncate,
        lgroup_semifield_bridge,
        parse_field_value,
    )

    field = lgroup_semifield_bridge(unit)
    truncation = gamma_truncate(field)
    _header(f"Γ truncation at u = {unit}")
    for value in evaluate or []:
        try:
            a = parse_field_value(value)
        except SemiringError as e:
            _fail(str(e))
        typer.echo(f"γ({value}) = {truncation.gamma(a)}")

    _section("Semifield laws")
    laws = check_semifield_laws(field)
    for law in laws:
        typer.echo(f"{law.name:<24} {'pass' if law.passed else 'FAIL'}")

    report = check_gamma(truncation)
    target = truncation.algebra
    reference = chain(unit)
    same = (
        target.oplus_table == reference.oplus_table and target.star_table == reference.star_table
    )
    _section("γ")
    typer.echo(f"pairs checked            {report.checked}")
    typer.echo(f"∧ failures               {len(report.meet_failures)}")
    typer.echo(f"+ failures on the cone   {len(report.cone_sum_failures)}")
    typer.echo(f"+ failures overall       {len(report.sum_failures)}")
    typer.echo(f"Γ(F) tables = chain:{unit}  {same}")
    _verdict(
        report.holds_on_cone and same and all(law.passed for law in laws),
        "γ is a homomorphism on the nonnegative cone",
        "γ check failed",
    )


@mv_app.command("matrix")
def mv_matrix(
    ctx: typer.Context,
    algebra: AlgebraOption,
    idempotent_scan: Annotated[
        int, typer.Option("--idempotent-scan", min=1, help="Matrix dimension N")
    ],
    reduct: Annotated[
        str, typer.Option("--reduct", help="join-odot or meet-oplus")
    ] = "join-odot",
) -> None:
    """Enumerate the idempotent N x N matrices over a reduct."""
    from mvring.semimodule import Reduct, idempotent_scan as scan, reduct_semiring

    cfg = _config(ctx)
    a = _finite(algebra)
    try:
        s = reduct_semiring(a, Reduct(reduct))
    except ValueError:
        _fail(f"--reduct must be join-odot or meet-oplus, got {reduct!r}")
    progress = _progress(cfg)
    if progress is not None:
        progress(f"scanning {len(s)}^{idempotent_scan ** 2} matrices over {s.name}")
    try:
        found = scan(s, idempotent_scan)
    except CapExceeded as e:
        _fail(str(e))
    _header(f"Idempotent {idempotent_scan}x{idempotent_scan} matrices over {s.name}")
    for u in found:
        typer.echo(u.format(cfg.decimal))
    typer.echo()
    typer.echo(f"{len(found)} idempotent matrices")


@mv_app.command("strong")
def mv_strong(
    ctx: typer.Context,
    algebra: AlgebraOption,
    module: Annotated[Path, typer.Option("--module", "-m", help="Module description file")],
) -> None:
    """Decide whether a semimodule is strong."""
    from mvring.formatting import format_value
    from mvring.semimodule import (
        SemimoduleError,
        is_strong,
        load_module,
        strong_via_endomorphisms,
    )

    cfg = _config(ctx)
    a = _finite(algebra)
    try:
        m = load_module(module.read_text(), a)
        result = is_strong(a, m)
    except FileNotFoundError:
        _fail(f"module file not found: {module}")
    except SemimoduleError as e:
        _fail(str(e))

    _header(f"Strongness of {m.name}")
    typer.echo(f"elements    {len(m)}")
    typer.echo(f"generators  {len(m.generators)}")
    if result.witness is not None:
        x, y, z = (format_value(w, cfg.decimal) for w in result.witness)
        typer.echo(f"  └─ witness a = {x}, b = {y}, x = {z}")
    try:
        check = strong_via_endomorphisms(a, m)
        typer.echo(f"End(M) cross-check  {'agrees' if check.agrees else 'DISAGREES'}")
    except CapExceeded:
        typer.echo("End(M) cross-check  skipped (too large)")
    _verdict(result.strong, "strong", "not strong")


@mv_app.command("dump")
def mv_dump(
    algebra: AlgebraOption,
    tables: Annotated[bool, typer.Option("--tables", help="Include ⊕ and ∗ tables")] = False,
) -> None:
    """Print an algebra in the text dump format."""
    from mvring.algebra import dump_algebra

    typer.echo(dump_algebra(_finite(algebra), tables=tables), nl=False)


# ============================================================================
# logic
# ============================================================================

logic_app = typer.Typer(help="Łukasiewicz logic commands", no_args_is_help=True)
app.add_typer(logic_app, name="logic")


def _formula(text: str):
    from mvring.logic import FormulaSyntaxError, parse_formula

    try:
        return parse_formula(text)
    except FormulaSyntaxError as e:
        _fail(str(e))


@logic_app.command("taut")
def logic_taut(
    ctx: typer.Context,
    formula: Annotated[str, typer.Argument(help='Formula, e.g. "x1 -> (x2 -> x1)"')],
    k: Annotated[int, typer.Option("--chain", "-k", min=1, help="Chain size parameter")] = 1,
) -> None:
    """Decide whether a formula evaluates to 1 everywhere on Chain(k)."""
    from mvring.formatting import format_value
    from mvring.logic import format_formula, is_tautology_on_chain

    cfg = _config(ctx)
    f = _formula(formula)
    try:
        result = is_tautology_on_chain(f, k)
    except CapExceeded as e:
        _fail(str(e))
    _header(f"{format_formula(f)} on chain:{k}")
    typer.echo(f"assignments checked  {result.checked}")
    if result.counterexample is not None:
        for var, value in result.counterexample.items():
            typer.echo(f"  └─ x{var} = {format_value(value, cfg.decimal)}")
        typer.echo(f"  └─ value {format_value(result.value, cfg.decimal)}")
    _verdict(result.valid, "tautology", "falsified")


@logic_app.command("tau")
def logic_tau(formula: Annotated[str, typer.Argument(help="Formula to translate")]) -> None:
    """Print the MV-term τ(φ)."""
    from mvring.logic import format_term, translate_tau

    typer.echo(format_term(translate_tau(_formula(formula))))


@logic_app.command("parse")
def logic_parse(formula: Annotated[str, typer.Argument(help="Formula to parse")]) -> None:
    """Print the canonical form of a formula."""
    from mvring.logic import format_formula, size, variables

    f = _formula(formula)
    typer.echo(format_formula(f))
    typer.echo(f"variables  {', '.join(f'x{v}' for v in variables(f)) or '-'}")
    typer.echo(f"size       {size(f)}")


# ============================================================================
# k0
# ============================================================================

k0_app = typer.Typer(help="Grothendieck group commands", no_args_is_help=True)
app.add_typer(k0_app, name="k0")


@k0_app.command("enumerate")
def k0_enumerate(
    ctx: typer.Context,
    algebra: AlgebraOption,
    max_dim: Annotated[int, typer.Option("--max-dim", min=1, help="Largest matrix size")] = 2,
    report: Annotated[str | None, typer.Option("--report", help="csv")] = None,
) -> None:
    """Catalog projective classes up to --max-dim and present K0."""
    from mvring.ktheory import K0Group, catalog_for, csv_report

    cfg = _config(ctx)
    a = _finite(algebra)
    if report not in (None, "csv"):
        _fail(f"--report must be csv, got {report!r}")
    try:
        group = K0Group(catalog_for(a, max_dim, _progress(cfg)))
    except CapExceeded as e:
        _fail(str(e))

    if report == "csv":
        typer.echo(csv_report(group), nl=False)
        return

    catalog = group.catalog
    _header(f"Projective classes over {a.name}[∨⊙] (dim ≤ {max_dim})")
    typer.echo(f"idempotent matrices scanned  {catalog.scanned}")
    typer.echo(f"classes                      {len(catalog.classes)}")
    _section("Classes")
    for c in catalog.classes:
        typer.echo(
            f"{c!s:<4} dim {c.dim}  |P| = {len(c.module):<4} {c.representative.format(cfg.decimal)}"
        )
    _section("Direct sums")
    for p in catalog.classes:
        sums = [group.sum_id(p.class_id, q.class_id) for q in catalog.classes]
        typer.echo(f"{p!s:<4} " + " ".join("-" if s is None else f"P{s}" for s in sums))

    pres = group.presentation()
    _section("K0")
    typer.echo(f"generators  {len(pres.generators)}")
    typer.echo(f"relations   {len(pres.relations)}")
    typer.echo(f"structure   {pres.structure()}" + ("  (partial)" if pres.partial else ""))
    failures = group.morphism_failures()
    _verdict(not failures, "k_S is a monoid morphism", f"k_S fails on {failures}")


# ============================================================================
# sheaf
# ============================================================================

sheaf_app = typer.Typer(help="Localization and sheaf commands", no_args_is_help=True)
app.add_typer(sheaf_app, name="sheaf")


@sheaf_app.command("sections")
def sheaf_sections(ctx: typer.Context, algebra: AlgebraOption) -> None:
    """Stalks of A∨⊙ over its primes and the map φ : S -> Ŝ."""
    from mvring.semiring import join_odot_reduct
    from mvring.sheaf import mv_global_sections, stalk_report

    cfg = _config(ctx)
    a = _finite(algebra)
    s = join_odot_reduct(a)
    entries = stalk_report(s)
    result = mv_global_sections(a)
    sections = result.sections

    _header(f"Sheaf of {s.name}")
    typer.echo(f"primes  {len(entries)}")
    _section("Stalks")
    for i, e in enumerate(entries):
        mv = {True: "MV", False: "not MV", None: "too large"}[e.mv]
        local = "local" if e.local else "NOT LOCAL"
        typer.echo(f"P{i} {e.prime.describe(cfg.decimal)}: |S_P| = {e.size}, {local}, {mv}")
    _section("Global sections")
    typer.echo(f"|Ŝ|              {len(sections.table) if sections.table else '-'}")
    typer.echo(f"φ homomorphism   {sections.hom_problem is None}")
    typer.echo(f"φ injective      {sections.injective}")
    typer.echo(f"φ surjective     {sections.surjective}")
    if sections.closed_problem:
        typer.echo(f"  └─ {sections.closed_problem}")
    if result.recognized is False:
        negation = "not recognized on Ŝ"
    elif result.transported is None:
        negation = "-"
    elif result.star_agrees is None:
        negation = "carried along φ (Ŝ too large to recognize)"
    else:
        negation = "recognized on Ŝ, " + ("agrees" if result.star_agrees else "DIFFERS")
    typer.echo(f"negation         {negation}")
    typer.echo(f"MV transport     {result.holds}")
    _verdict(
        sections.isomorphism and result.holds,
        "φ is an isomorphism of MV-algebras",
        "φ is not an isomorphism",
    )


# ============================================================================
# ltb
# ============================================================================

ltb_app = typer.Typer(help="Łukasiewicz transform image codec", no_args_is_help=True)
app.add_typer(ltb_app, name="ltb")

BlockOption = Annotated[str, typer.Option("--block", help="Block size ROWSxCOLS")]
TargetOption = Annotated[str, typer.Option("--target", help="Coefficient block ROWSxCOLS")]


def _read_image(path: Path):
    from mvring.codec import ImageFormatError, read_pnm

    try:
        return read_pnm(path)
    except FileNotFoundError:
        _fail(f"file not found: {path}")
    except ImageFormatError as e:
        _fail(f"{path}: {e}")


def _ratio_line(ratio) -> str:
    from mvring.formatting import format_fraction

    return f"ρ = {float(ratio):g} ({format_fraction(ratio)})"


@ltb_app.command("compress")
def ltb_compress(
    ctx: typer.Context,
    source: Annotated[Path, typer.Argument(help="Input PGM/PPM")],
    target_path: Annotated[Path, typer.Argument(help="Output .ltb")],
    block: BlockOption = "4x4",
    target: TargetOption = "2x2",
) -> None:
    """Compress a PGM/PPM image into an .ltb container."""
    from mvring.codec import CodecError, compress, compression_ratio

    cfg = _config(ctx)
    a, b = _dims(block, "--block")
    c, d = _dims(target, "--target")
    raster = _read_image(source)
    try:
        ltb = compress(raster, a, b, c, d, cfg.threads)
    except (CodecError, CapExceeded) as e:
        _fail(str(e))
    data = ltb.pack()
    target_path.write_bytes(data)
    typer.echo(f"{source} -> {target_path}")
    typer.echo(f"{raster.width}x{raster.height}, {raster.channels} channel(s)")
    typer.echo(f"blocks {a}x{b} -> {c}x{d}, {_ratio_line(compression_ratio(a, b, c, d))}")
    typer.echo(f"{len(data)} bytes")


@ltb_app.command("decompress")
def ltb_decompress(
    ctx: typer.Context,
    source: Annotated[Path, typer.Argument(help="Input .ltb")],
    target_path: Annotated[Path, typer.Argument(help="Output PGM/PPM")],
    ascii_output: Annotated[bool, typer.Option("--ascii", help="Write P2/P3")] = False,
) -> None:
    """Reconstruct an image from an .ltb container."""
    from mvring.codec import CodecError, ContainerError, LtbFile, decompress, write_pnm

    cfg = _config(ctx)
    try:
        ltb = LtbFile.load(source)
    except FileNotFoundError:
        _fail(f"file not found: {source}")
    except ContainerError as e:
        _fail(f"{source}: {e}")
    try:
        raster = decompress(ltb, cfg.threads)
    except (CodecError, CapExceeded) as e:
        _fail(f"{source}: {e}")
    write_pnm(raster, target_path, binary=not ascii_output)
    typer.echo(f"{source} -> {target_path}")
    typer.echo(f"{raster.width}x{raster.height}, {raster.channels} channel(s)")


@ltb_app.command("roundtrip")
def ltb_roundtrip(
    ctx: typer.Context,
    source: Annotated[Path, typer.Argument(help="Input PGM/PPM")],
    block: BlockOption = "4x4",
    target: TargetOption = "2x2",
    trials: Annotated[
        int, typer.Option("--trials", min=0, help="Extra random rasters of the same size")
    ] = 0,
) -> None:
    """
    Compress and reconstruct, then check that a second pass is lossless.

    Each trial repeats the check on a seeded random raster with the same
    dimensions as the input.
    """
    from mvring.codec import CodecError, random_raster, roundtrip

    cfg = _config(ctx)
    progress = _progress(cfg)
    a, b = _dims(block, "--block")
    c, d = _dims(target, "--target")
    raster = _read_image(source)
    try:
        report = roundtrip(raster, a, b, c, d, cfg.threads)
        lossless = [report.second_pass_lossless]
        for t in range(trials):
            if progress is not None:
                progress(f"trial {t + 1}/{trials}")
            trial = random_raster(
                raster.width, raster.height, raster.channels, seed=cfg.seed + t
            )
            lossless.append(roundtrip(trial, a, b, c, d, cfg.threads).second_pass_lossless)
    except (CodecError, CapExceeded) as e:
        _fail(str(e))

    def db(value: float) -> str:
        return "inf" if value == float("inf") else f"{value:.4f} dB"

    _header(f"Round trip of {source}")
    typer.echo(_ratio_line(report.ratio))
    typer.echo(f"PSNR (exact)      {db(report.psnr_exact)}")
    typer.echo(f"PSNR (stored)     {db(report.psnr_stored)}")
    typer.echo(f"container         {report.container_bytes} bytes")
    typer.echo(f"second pass       {'lossless' if report.second_pass_lossless else 'LOSSY'}")
    if trials:
        typer.echo(f"random trials     {sum(lossless[1:])}/{trials} lossless")
    _verdict(all(lossless), "second pass is lossless", "second pass changed the image")


@ltb_app.command("basis")
def ltb_basis(
    ctx: typer.Context,
    m: Annotated[int, typer.Option("--m", help="Samples per block")],
    n: Annotated[int, typer.Option("--n", help="Coefficients per block")],
) -> None:
    """Print the m x n basis matrix."""
    from mvring.codec import CodecError, basis_matrix
    from mvring.formatting import format_value

    cfg = _config(ctx)
    try:
        p = basis_matrix(m, n)
    except (CodecError, CapExceeded) as e:
        _fail(str(e))
    cells = [[format_value(v, cfg.decimal) for v in row] for row in p.entries]
    width = max(len(cell) for row in cells for cell in row)
    for row in cells:
        typer.echo(" ".join(cell.rjust(width) for cell in row))


if __name__ == "__main__":
    app()
