"""
main.py

Objetivo del script:
Command-line front end. One verb per identity: parse complex, nerve or graph
files, run the checks and print a canonical report.

Exit codes: 0 all identities pass, 1 an identity fails, 2 parse error,
3 precondition or structural violation.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Annotated

import typer
from pydantic import ValidationError
from rich.console import Console

from cubegrowth.config import Settings, load_settings
from cubegrowth.cubical import (
    CubeComplex,
    LabeledBall,
    cat0_witness,
    euler_char_cc,
    is_eulerian_manifold_cc,
    npc_witness,
    vertex_link,
)
from cubegrowth.exactalg import rf_series
from cubegrowth.exceptions import (
    AlgebraError,
    ConfigurationError,
    ParseError,
    PreconditionError,
    StructuralError,
)
from cubegrowth.generators import (
    GeneratorOrder,
    ProductGraph,
    ball_stats,
    finite_as_labeled,
    graph_from_nerve,
    graph_product_ball,
    sphere_sizes,
    torus_ball,
    torus_complex,
)
from cubegrowth.growth import (
    cbar_matrix,
    coefficients_at,
    davis_growth_closed,
    davis_value,
    euler_trace_check,
    growth_matrix_finite,
    growth_matrix_torus_closed,
    growth_matrix_truncated,
    reciprocity_check,
    reciprocity_matrix,
    star_solver,
    sum_coefficients,
    torus_orbit_ids,
    verify_inverse,
    vertex_fpolys,
)
from cubegrowth.io_utils import format_cubes, read_cubes, read_facets, read_graph, write_text
from cubegrowth.logger import get_logger
from cubegrowth.models import CommandOptions, CommandResult, OutputFormat, Verb
from cubegrowth.reporting import (
    growth_report_rows,
    json_text,
    machine_lines,
    matrix_rows,
    result_table,
    series_text,
    status,
)
from cubegrowth.simplicial import (
    SimplicialComplex,
    dehn_sommerville_check,
    euler_char,
    f_polynomial,
    is_eulerian_sphere,
    is_flag,
)

app = typer.Typer(
    help="Growth series and link coefficients of CAT(0) cube complexes.",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

InputArg = Annotated[Path, typer.Argument(help="Input file (.cubes, .facets or .graph).")]
OptionalInputArg = Annotated[
    Path | None, typer.Argument(help="Input file; omit to use --dim/--subdiv.")
]
RadiusOpt = Annotated[int | None, typer.Option("--radius", help="Ball radius R.")]
DegreeOpt = Annotated[int | None, typer.Option("--degree", help="Series degree N.")]
BaseOpt = Annotated[str | None, typer.Option("--base", help="Base vertex.")]
DimOpt = Annotated[int | None, typer.Option("--dim", help="Dimension n.")]
SubdivOpt = Annotated[int | None, typer.Option("--subdiv", help="Subdivision k.")]
FormatOpt = Annotated[
    OutputFormat | None, typer.Option("--format", help="Report format: text, machine or json.")
]
EmitOpt = Annotated[Path | None, typer.Option("--emit", help="Write the ball complex here.")]
LogLevelOpt = Annotated[str | None, typer.Option("--log-level", help="Override log level.")]


def _load(path: Path) -> CubeComplex | SimplicialComplex | ProductGraph:
    suffix = path.suffix.lower()
    if suffix == ".cubes":
        return read_cubes(path)
    if suffix == ".facets":
        return read_facets(path)
    if suffix == ".graph":
        return read_graph(path)
    raise ParseError("unknown input type", path, None, "suffix is .cubes, .facets or .graph")


def _expect(path: Path, kind: type) -> object:
    loaded = _load(path)
    if not isinstance(loaded, kind):
        raise PreconditionError(
            f"this verb does not accept {path.suffix} files", field="inputs", value=str(path)
        )
    return loaded


def _base_vertex(complex_: CubeComplex, base: str | None) -> str:
    if base is None:
        return complex_.sorted_vertices()[0]
    if not complex_.has_vertex(base):
        raise PreconditionError("unknown base vertex", field="base", value=base)
    return base


def _execute(
    verb: Verb,
    build: Callable[[CommandOptions, Settings], CommandResult],
    *,
    inputs: list[Path | None],
    radius: int | None = None,
    degree: int | None = None,
    base: str | None = None,
    dim: int | None = None,
    subdiv: int | None = None,
    output_format: OutputFormat | None = None,
    emit: Path | None = None,
    log_level: str | None = None,
) -> None:
    try:
        settings = load_settings()
        get_logger(level=log_level or settings.log_level)
    except ConfigurationError as exc:
        err_console.print(f"[red]Configuration error:[/red] {exc}")
        raise typer.Exit(code=EXIT_PRECONDITION) from exc

    try:
        options = CommandOptions(
            verb=verb,
            inputs=[str(p) for p in inputs if p is not None],
            radius=settings.radius if radius is None else radius,
            degree=settings.degree if degree is None else degree,
            base=base,
            dim=dim,
            subdiv=subdiv,
            output_format=output_format or OutputFormat(settings.output_format),
            emit=str(emit) if emit is not None else None,
        ).validate_for_verb()
        logger.info("Running '%s' on %s", verb.value, options.inputs or "generated input")
        result = build(options, settings)
    except (ParseError, FileNotFoundError) as exc:
        err_console.print(f"[red]Parse error:[/red] {exc}")
        raise typer.Exit(code=EXIT_PARSE) from exc
    except (ValidationError, PreconditionError, StructuralError, AlgebraError) as exc:
        err_console.print(f"[red]Precondition violated:[/red] {exc}")
        raise typer.Exit(code=EXIT_PRECONDITION) from exc

    if options.output_format is OutputFormat.MACHINE:
        typer.echo(machine_lines(result), nl=False)
    elif options.output_format is OutputFormat.JSON:
        typer.echo(json_text(result), nl=False)
    else:
        console.print(result_table(result))
    raise typer.Exit(code=0 if result.passed else EXIT_FAIL)


def _check(options: CommandOptions, settings: Settings) -> CommandResult:
    loaded = _load(Path(options.inputs[0]))
    if isinstance(loaded, SimplicialComplex):
        result = CommandResult("Simplicial complex check")
        result.add("vertices", len(loaded.vertices))
        result.add("dimension", loaded.dimension)
        result.add("fpoly", f_polynomial(loaded))
        result.add("euler_char", euler_char(loaded))
        flag = is_flag(loaded)
        result.add("flag", status(flag))
        result.passed = flag
        if options.dim is not None:
            sphere = is_eulerian_sphere(loaded, options.dim)
            dehn = dehn_sommerville_check(loaded, options.dim + 1)
            result.add("eulerian_sphere", status(sphere))
            result.add("dehn_sommerville", status(dehn))
            result.passed = flag and sphere and dehn
        return result
    if isinstance(loaded, ProductGraph):
        raise PreconditionError("'check' accepts .cubes or .facets files", field="inputs")

    result = CommandResult("Cube complex check")
    result.add("vertices", len(loaded.vertices))
    result.add("cells", " ".join(str(c) for c in loaded.cell_counts()))
    result.add("euler_char", euler_char_cc(loaded))
    npc = npc_witness(loaded)
    result.add("npc", status(npc is None))
    if npc is not None:
        result.add("npc_witness", npc)
        result.attach("npc_witness", npc.to_dict())
    witness = cat0_witness(loaded)
    result.add("cat0", status(witness is None))
    if witness is not None:
        result.add("cat0_witness", witness)
        result.attach("cat0_witness", witness.to_dict())
    result.passed = witness is None
    if options.dim is not None:
        manifold = is_eulerian_manifold_cc(loaded, options.dim)
        result.add("eulerian_manifold", status(manifold))
        result.passed = result.passed and manifold
    return result


def _fpoly(options: CommandOptions, settings: Settings) -> CommandResult:
    loaded = _load(Path(options.inputs[0]))
    result = CommandResult("f-polynomials")
    if isinstance(loaded, SimplicialComplex):
        result.add("fpoly", f_polynomial(loaded))
    elif isinstance(loaded, CubeComplex):
        targets = (
            [_base_vertex(loaded, options.base)] if options.base else loaded.sorted_vertices()
        )
        for x in targets:
            result.add(f"fpoly[{x}]", f_polynomial(vertex_link(loaded, x)))
    else:
        raise PreconditionError("'fpoly' accepts .cubes or .facets files", field="inputs")
    return result


def _coeffs(options: CommandOptions, settings: Settings) -> CommandResult:
    complex_ = _expect(Path(options.inputs[0]), CubeComplex)
    x = _base_vertex(complex_, options.base)
    closed = coefficients_at(complex_, x)
    oracle = star_solver(complex_, x)
    result = CommandResult(f"Coefficients at {x}")
    for y, value in closed.items():
        result.add(f"c[{x},{y}]", value.canonical())
    agrees = closed == oracle
    result.add("star_solver", status(agrees))
    result.passed = agrees
    return result


def _sum_coeffs(options: CommandOptions, settings: Settings) -> CommandResult:
    complex_ = _expect(Path(options.inputs[0]), CubeComplex)
    targets = [_base_vertex(complex_, options.base)] if options.base else complex_.sorted_vertices()
    result = CommandResult("Coefficient sums")
    for x in targets:
        check = sum_coefficients(complex_, x)
        result.add(f"sum[{x}]", check.total.canonical())
        result.add(f"expected[{x}]", check.expected.canonical())
        result.attach(f"sum[{x}]", check.to_dict())
        result.passed = result.passed and check.passed
    return result


def _graph_ball(options: CommandOptions, graph: ProductGraph) -> LabeledBall:
    ball = graph_product_ball(graph, options.radius)
    if options.emit:
        write_text(Path(options.emit), format_cubes(ball.complex))
    return ball


def _growth(options: CommandOptions, settings: Settings) -> CommandResult:
    loaded = _load(Path(options.inputs[0]))
    result = CommandResult("Growth matrix")
    if isinstance(loaded, CubeComplex):
        names = [str(v) for v in loaded.sorted_vertices()]
        result.rows += matrix_rows("growth", names, growth_matrix_finite(loaded))
        return result
    if isinstance(loaded, SimplicialComplex):
        loaded = graph_from_nerve(loaded)
    ball = _graph_ball(options, loaded)
    series = growth_matrix_truncated(ball, options.degree, strict=False)
    names = [str(o) for o in ball.orbit_ids]
    for name, safe in zip(names, series.per_row_degree, strict=True):
        result.add(f"safe_degree[{name}]", safe)
    result.rows += matrix_rows("growth", names, series)
    return result


def _verify(options: CommandOptions, settings: Settings) -> CommandResult:
    loaded = _load(Path(options.inputs[0]))
    if isinstance(loaded, CubeComplex):
        ball = finite_as_labeled(loaded, options.base, settings.median_limit)
        report = verify_inverse(
            cbar_matrix(ball),
            growth_matrix_finite(loaded),
            orbit_ids=ball.orbit_ids,
            vertex_fpolys=vertex_fpolys(ball),
        )
    else:
        graph = graph_from_nerve(loaded) if isinstance(loaded, SimplicialComplex) else loaded
        ball = _graph_ball(options, graph)
        report = verify_inverse(
            cbar_matrix(ball),
            growth_matrix_truncated(ball, options.degree, strict=False),
            orbit_ids=ball.orbit_ids,
        )
    result = CommandResult("Inverse verification", growth_report_rows(report))
    result.attach("report", report.to_dict())
    result.passed = report.passed
    return result


def _davis(options: CommandOptions, settings: Settings) -> CommandResult:
    nerve = _expect(Path(options.inputs[0]), SimplicialComplex)
    closed = davis_growth_closed(nerve)
    ball = graph_product_ball(graph_from_nerve(nerve), options.radius)
    compared = min(options.degree, options.radius)
    if compared < options.degree:
        logger.warning(
            "Degree %d exceeds the ball radius; comparing up to degree %d",
            options.degree,
            compared,
        )
    expected = rf_series(closed, compared)
    counted = sphere_sizes(ball)[: compared + 1]
    result = CommandResult("Davis growth series")
    result.add("closed", closed.canonical())
    result.add("compared_degree", compared)
    result.add("series", series_text(expected))
    result.add("ball_spheres", series_text(counted))
    matches = [int(c) for c in expected] == counted
    result.add("davis", status(matches))
    report = verify_inverse(
        cbar_matrix(ball),
        growth_matrix_truncated(ball, compared, strict=False),
        orbit_ids=ball.orbit_ids,
    )
    result.attach("report", report.to_dict())
    result.add("identity", status(report.identity_holds))
    result.passed = matches and report.identity_holds
    return result


def _torus(options: CommandOptions, settings: Settings) -> CommandResult:
    n, k = options.dim, options.subdiv
    ball = torus_ball(n, k, options.radius)
    if options.emit:
        write_text(Path(options.emit), format_cubes(ball.complex))
    report = verify_inverse(
        cbar_matrix(ball),
        growth_matrix_torus_closed(n, k),
        orbit_ids=torus_orbit_ids(n, k),
        vertex_fpolys=vertex_fpolys(ball),
    )
    result = CommandResult(f"Torus n={n} k={k}", growth_report_rows(report))
    result.attach("report", report.to_dict())
    result.passed = report.passed
    return result


def _ball_verb(options: CommandOptions, order: GeneratorOrder) -> CommandResult:
    graph = _expect(Path(options.inputs[0]), ProductGraph)
    if not graph.all_orders(order):
        raise PreconditionError(
            f"every generator must have order {order.value}",
            field="inputs",
            value=options.inputs[0],
        )
    ball = _graph_ball(options, graph)
    stats = ball_stats(ball)
    result = CommandResult(f"Graph product ball R={options.radius}")
    result.add("vertices", stats.vertex_count)
    result.add("orbits", stats.orbit_count)
    result.add("dim", stats.dim)
    result.add("star_complete_radius", stats.star_complete_radius)
    result.add("spheres", series_text(stats.sphere_sizes))
    result.add("cells", " ".join(str(c) for c in stats.cube_counts))
    if ball.quotient_euler is not None:
        result.add("quotient_euler", ball.quotient_euler)
    report = verify_inverse(
        cbar_matrix(ball),
        growth_matrix_truncated(ball, options.degree, strict=False),
        orbit_ids=ball.orbit_ids,
    )
    result.add("identity", status(report.identity_holds))
    result.attach("ball", stats.to_dict())
    result.attach("report", report.to_dict())
    result.passed = report.identity_holds
    return result


def _torus_reciprocity(options: CommandOptions) -> CommandResult:
    n, k = options.dim, options.subdiv
    ball = torus_ball(n, k, options.radius)
    ids = torus_orbit_ids(n, k)
    result = CommandResult(f"Reciprocity n={n} k={k}")
    cbar = reciprocity_matrix(cbar_matrix(ball), n, ids)
    growth = reciprocity_matrix(growth_matrix_torus_closed(n, k), n, ids)
    result.add("cbar", f"{status(cbar.passed)} ({cbar.checked} entries)")
    result.add("growth", f"{status(growth.passed)} ({growth.checked} entries)")
    result.attach("cbar", cbar.to_dict())
    result.attach("growth", growth.to_dict())
    for cell in cbar.failures:
        result.add("cbar_failure", cell)
    for cell in growth.failures:
        result.add("growth_failure", cell)
    result.passed = cbar.passed and growth.passed
    if k >= 3:
        manifold = is_eulerian_manifold_cc(torus_complex(n, k), n)
        result.add("eulerian_manifold", status(manifold))
        result.passed = result.passed and manifold
    return result


def _reciprocity(options: CommandOptions, settings: Settings) -> CommandResult:
    if not options.inputs:
        return _torus_reciprocity(options)
    nerve = _expect(Path(options.inputs[0]), SimplicialComplex)
    n = nerve.dimension + 1 if options.dim is None else options.dim
    closed = davis_growth_closed(nerve)
    graph = graph_from_nerve(nerve)
    ball = graph_product_ball(graph, max(graph.clique_number, 1))
    cbar = cbar_matrix(ball)[0, 0]
    result = CommandResult(f"Reciprocity n={n}")
    result.add("cbar", cbar.canonical())
    checks = {
        "eulerian_sphere": is_eulerian_sphere(nerve, n - 1),
        "dehn_sommerville": dehn_sommerville_check(nerve, n),
        "cbar_closed_form": cbar == davis_value(f_polynomial(nerve)),
        "growth": reciprocity_check(closed, n),
        "cbar_reciprocity": reciprocity_check(cbar, n),
    }
    for name, passed in checks.items():
        result.add(name, status(passed))
    result.passed = all(checks.values())
    return result


def _euler_trace(options: CommandOptions, settings: Settings) -> CommandResult:
    if options.inputs:
        complex_ = _expect(Path(options.inputs[0]), CubeComplex)
        ball = finite_as_labeled(complex_, options.base, settings.median_limit)
    else:
        ball = torus_ball(options.dim, options.subdiv, options.radius)
    check = euler_trace_check(ball)
    result = CommandResult("Euler trace")
    result.add("trace", check.trace)
    result.add("euler_char", check.euler_char)
    result.add("stars_embed", status(check.stars_embed))
    result.attach("euler_trace", check.to_dict())
    result.passed = check.passed
    return result


@app.command()
def check(
    path: InputArg,
    dim: DimOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """CAT(0), NPC and Euler checks for a cube complex; flag and sphere checks for a nerve."""
    _execute(
        Verb.CHECK,
        _check,
        inputs=[path],
        dim=dim,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def fpoly(
    path: InputArg,
    base: BaseOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """f-polynomial of a complex, or of the vertex links of a cube complex."""
    _execute(
        Verb.FPOLY,
        _fpoly,
        inputs=[path],
        base=base,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def coeffs(
    path: InputArg,
    base: BaseOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Coefficients c_xy at a vertex, cross-checked against the star linear system."""
    _execute(
        Verb.COEFFS,
        _coeffs,
        inputs=[path],
        base=base,
        output_format=output_format,
        log_level=log_level,
    )


@app.command("sum-coeffs")
def sum_coeffs(
    path: InputArg,
    base: BaseOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Σ_y c_xy against f_x(-t/(1+t))."""
    _execute(
        Verb.SUM_COEFFS,
        _sum_coeffs,
        inputs=[path],
        base=base,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def growth(
    path: InputArg,
    radius: RadiusOpt = None,
    degree: DegreeOpt = None,
    emit: EmitOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Exact growth matrix of a finite complex, or truncated series of a ball."""
    _execute(
        Verb.GROWTH,
        _growth,
        inputs=[path],
        radius=radius,
        degree=degree,
        emit=emit,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def verify(
    path: InputArg,
    radius: RadiusOpt = None,
    degree: DegreeOpt = None,
    base: BaseOpt = None,
    emit: EmitOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Check that the c̄ matrix inverts the growth matrix."""
    _execute(
        Verb.VERIFY,
        _verify,
        inputs=[path],
        radius=radius,
        degree=degree,
        base=base,
        emit=emit,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def davis(
    path: InputArg,
    radius: RadiusOpt = None,
    degree: DegreeOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Closed Davis growth series of a nerve against ball sphere counts."""
    _execute(
        Verb.DAVIS,
        _davis,
        inputs=[path],
        radius=radius,
        degree=degree,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def torus(
    dim: DimOpt = None,
    subdiv: SubdivOpt = None,
    radius: RadiusOpt = None,
    emit: EmitOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Exact inverse check for Z^n on the cubulated R^n with quotient (Z/k)^n."""
    _execute(
        Verb.TORUS,
        _torus,
        inputs=[],
        radius=radius,
        dim=dim,
        subdiv=subdiv,
        emit=emit,
        output_format=output_format,
        log_level=log_level,
    )


@app.command("raag-ball")
def raag_ball(
    path: InputArg,
    radius: RadiusOpt = None,
    degree: DegreeOpt = None,
    emit: EmitOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Ball statistics and truncated inverse check for a right-angled Artin group."""
    _execute(
        Verb.RAAG_BALL,
        lambda options, _: _ball_verb(options, GeneratorOrder.INFINITE),
        inputs=[path],
        radius=radius,
        degree=degree,
        emit=emit,
        output_format=output_format,
        log_level=log_level,
    )


@app.command("racg-ball")
def racg_ball(
    path: InputArg,
    radius: RadiusOpt = None,
    degree: DegreeOpt = None,
    emit: EmitOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Ball statistics and truncated inverse check for a right-angled Coxeter group."""
    _execute(
        Verb.RACG_BALL,
        lambda options, _: _ball_verb(options, GeneratorOrder.TWO),
        inputs=[path],
        radius=radius,
        degree=degree,
        emit=emit,
        output_format=output_format,
        log_level=log_level,
    )


@app.command()
def reciprocity(
    path: OptionalInputArg = None,
    dim: DimOpt = None,
    subdiv: SubdivOpt = None,
    radius: RadiusOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """r(1/t) = (-1)^n r(t) for the Davis series of a nerve, or for a torus."""
    _execute(
        Verb.RECIPROCITY,
        _reciprocity,
        inputs=[path],
        radius=radius,
        dim=dim,
        subdiv=subdiv,
        output_format=output_format,
        log_level=log_level,
    )


@app.command("euler-trace")
def euler_trace(
    path: OptionalInputArg = None,
    base: BaseOpt = None,
    dim: DimOpt = None,
    subdiv: SubdivOpt = None,
    radius: RadiusOpt = None,
    output_format: FormatOpt = None,
    log_level: LogLevelOpt = None,
) -> None:
    """Σ_x f_x(-1/2) against χ of the quotient."""
    _execute(
        Verb.EULER_TRACE,
        _euler_trace,
        inputs=[path],
        radius=radius,
        base=base,
        dim=dim,
        subdiv=subdiv,
        output_format=output_format,
        log_level=log_level,
    )


if __name__ == "__main__":
    app()
