"""
growth.py

Objetivo del script:
Growth series and link coefficients of cube complexes: c_xy from f-polynomials
of links, orbit sums c̄_xy, exact and truncated growth matrices, the star
linear-system oracle, inverse verification, coefficient sums, the closed
Davis formula, reciprocity and the Euler trace.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Sequence
from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian

from cubegrowth.cubical import (
    CubeComplex,
    LabeledBall,
    cube_link,
    spanned_cube,
    star,
    vertex_link,
)
from cubegrowth.exactalg import (
    ONE,
    ZERO,
    Polynomial,
    RationalFunction,
    RatMatrix,
    SeriesMatrix,
    mat_mul,
    mat_solve,
    poly_subst,
    rf_invert_t,
    rf_series,
    rf_sum,
    series_mul,
)
from cubegrowth.exceptions import (
    DimensionMismatchError,
    DisconnectedError,
    NonFlagNerveError,
    PreconditionError,
    TruncationError,
)
from cubegrowth.models import (
    CellFailure,
    DerivedCheck,
    EulerTraceResult,
    GrowthReport,
    ReciprocityResult,
    SumCheck,
)
from cubegrowth.simplicial import SimplicialComplex, f_polynomial, non_flag_witness

logger = logging.getLogger(__name__)

_ONE_MINUS_T2 = RationalFunction(Polynomial((1, 0, -1)))
EDGE_WEIGHT = RationalFunction(Polynomial((0, -1))) / _ONE_MINUS_T2
LINK_ARGUMENT = RationalFunction(Polynomial((0, 0, 1))) / _ONE_MINUS_T2
DAVIS_ARGUMENT = RationalFunction(Polynomial((0, -1)), Polynomial((1, 1)))
TRACE_POINT = Fraction(-1, 2)


@lru_cache(maxsize=1024)
def _link_value(f: Polynomial) -> RationalFunction:
    return poly_subst(f, LINK_ARGUMENT)


@lru_cache(maxsize=1024)
def davis_value(f: Polynomial) -> RationalFunction:
    """f(-t/(1+t)) for an f-polynomial f."""
    return poly_subst(f, DAVIS_ARGUMENT)


def _unwrap(space: CubeComplex | LabeledBall, x: Hashable) -> CubeComplex:
    if isinstance(space, LabeledBall):
        space.require_star_complete(x)
        return space.complex
    return space


def coefficient(space: CubeComplex | LabeledBall, x: Hashable, y: Hashable) -> RationalFunction:
    """c_xy = (-t/(1-t²))^d(x,y) · f_xy(t²/(1-t²)), zero when no cube holds x and y.

    Raises:
        StarIncompleteError: If ``space`` is a ball window and x lies beyond
            its star-complete radius.
    """
    complex_ = _unwrap(space, x)
    cube = spanned_cube(complex_, x, y)
    if cube is None:
        return ZERO
    f = f_polynomial(cube_link(complex_, cube))
    return EDGE_WEIGHT**cube.dim * _link_value(f)


def coefficients_at(
    space: CubeComplex | LabeledBall, x: Hashable
) -> dict[Hashable, RationalFunction]:
    """Every nonzero c_xy; only vertices of the star of x can appear."""
    complex_ = _unwrap(space, x)
    return {y: coefficient(complex_, x, y) for y in star(complex_, x).sorted_vertices()}


def star_solver(complex_: CubeComplex, x: Hashable) -> dict[Hashable, RationalFunction]:
    """Solve Σ_y a_y t^d(y,z) = 1_x(z) over the vertices z of the star of x."""
    star_x = star(complex_, x)
    order = star_x.sorted_vertices()
    system = RatMatrix.from_rows(
        [[RationalFunction.monomial(star_x.distance(y, z)) for z in order] for y in order]
    )
    rhs = [ONE if z == x else ZERO for z in order]
    solution = mat_solve(system, rhs)
    logger.debug("Solved %dx%d star system at %s", len(order), len(order), x)
    return dict(zip(order, solution, strict=True))


def coefficient_bar(ball: LabeledBall, x: Hashable, y: Hashable) -> RationalFunction:
    """Orbit sum c̄_xy over the ball vertices labeled y, seen from the lift of x."""
    lift = ball.lift[x]
    return rf_sum(
        value for vertex, value in coefficients_at(ball, lift).items() if ball.label[vertex] == y
    )


def cbar_matrix(ball: LabeledBall) -> RatMatrix:
    orbits = ball.orbit_ids
    position = {orbit: i for i, orbit in enumerate(orbits)}
    rows = []
    for orbit in orbits:
        buckets: list[list[RationalFunction]] = [[] for _ in orbits]
        for vertex, value in coefficients_at(ball, ball.lift[orbit]).items():
            buckets[position[ball.label[vertex]]].append(value)
        rows.append([rf_sum(bucket) for bucket in buckets])
    logger.info("Assembled %dx%d c̄ matrix", len(orbits), len(orbits))
    return RatMatrix.from_rows(rows)


def c_matrix(complex_: CubeComplex) -> RatMatrix:
    """Matrix (c_xy) of a finite complex, rows in sorted vertex order."""
    order = complex_.sorted_vertices()
    rows = []
    for x in order:
        values = coefficients_at(complex_, x)
        rows.append([values.get(y, ZERO) for y in order])
    return RatMatrix.from_rows(rows)


def growth_matrix_finite(complex_: CubeComplex) -> RatMatrix:
    if not complex_.is_connected():
        raise DisconnectedError("growth matrix needs a connected complex", field="complex")
    order = complex_.sorted_vertices()
    return RatMatrix.from_rows(
        [[RationalFunction.monomial(complex_.distance(x, y)) for y in order] for x in order]
    )


def growth_series_at(complex_: CubeComplex, x: Hashable) -> RationalFunction:
    """G_x = Σ_y t^d(x,y) over a finite complex."""
    counts: dict[int, int] = {}
    for d in complex_.distances_from(x).values():
        counts[d] = counts.get(d, 0) + 1
    return RationalFunction(Polynomial(tuple(counts.get(k, 0) for k in range(max(counts) + 1))))


def growth_row(ball: LabeledBall, vertex: Hashable, degree: int) -> list[list[int]]:
    """Counts of ball vertices by label and distance from ``vertex``, up to ``degree``.

    Rows follow ``ball.orbit_ids``. Two vertices of one orbit give the same
    counts up to the smaller of their ``ball.horizon`` values.
    """
    position = {orbit: i for i, orbit in enumerate(ball.orbit_ids)}
    counts = [[0] * (degree + 1) for _ in position]
    for other, d in ball.complex.distances_from(vertex).items():
        if d <= degree:
            counts[position[ball.label[other]]][d] += 1
    return counts


def growth_matrix_truncated(
    ball: LabeledBall, degree: int, *, strict: bool = True
) -> SeriesMatrix:
    """Orbit growth series read off the ball up to ``degree``.

    Row y counts ball vertices by label and distance from lift(y). Each row
    is exact up to ``ball.safe_degree(y)``, which is R - d(base, lift(y)) for a
    plain ball; finite complete windows are exact everywhere.

    Raises:
        TruncationError: In strict mode, when ``degree`` exceeds a row's safe degree.
    """
    if degree < 0:
        raise PreconditionError("degree must be >= 0", field="degree", value=degree)
    orbits = ball.orbit_ids
    cells: list[tuple[Fraction, ...]] = []
    per_row: list[int] = []
    for orbit in orbits:
        safe = ball.safe_degree(orbit)
        if safe is not None and safe < degree and strict:
            raise TruncationError(
                f"row {orbit} is exact only to degree {safe}",
                field="degree",
                value=degree,
            )
        per_row.append(degree if safe is None else min(degree, safe))
        counts = growth_row(ball, ball.lift[orbit], degree)
        cells.extend(tuple(Fraction(c) for c in row) for row in counts)
    return SeriesMatrix(
        rows=len(orbits),
        cols=len(orbits),
        degree=degree,
        entries=tuple(cells),
        per_row_degree=tuple(per_row),
    )


def torus_orbit_ids(n: int, k: int) -> list[tuple[int, ...]]:
    return list(cartesian(range(k), repeat=n))


def growth_matrix_torus_closed(n: int, k: int) -> RatMatrix:
    """Exact orbit growth matrix of Z^n on the unit cubulation, quotient (Z/k)^n.

    The 1-D factor for residue r = (a - b) mod k is (t^r + t^(k-r))/(1 - t^k),
    and (1 + t^k)/(1 - t^k) for r = 0; entries multiply over coordinates.
    """
    if n < 0 or k < 2:
        raise PreconditionError("torus needs n >= 0 and k >= 2", field="k", value=k)
    denominator = Polynomial.constant(1) - Polynomial.monomial(k)
    factors = []
    for r in range(k):
        numerator = Polynomial.monomial(r) + Polynomial.monomial(k - r)
        factors.append(RationalFunction(numerator, denominator))
    orbits = torus_orbit_ids(n, k)
    rows = []
    for a in orbits:
        row = []
        for b in orbits:
            entry = ONE
            for ai, bi in zip(a, b, strict=True):
                entry = entry * factors[(ai - bi) % k]
            row.append(entry)
        rows.append(row)
    return RatMatrix.from_rows(rows)


def full_growth_series(growth: RatMatrix) -> tuple[RationalFunction, ...]:
    """G_x = Σ_z G_xz for every row."""
    return growth.row_sums()


def _delta(i: int, j: int) -> RationalFunction:
    return ONE if i == j else ZERO


def verify_inverse(
    cbar: RatMatrix,
    growth: RatMatrix | SeriesMatrix,
    *,
    orbit_ids: Sequence[Hashable] | None = None,
    vertex_fpolys: Sequence[Polynomial] | None = None,
) -> GrowthReport:
    """Check Σ_y c̄_xy G_yz = δ_xz exactly or up to each cell's safe degree.

    In exact mode the summed forms of the identity are added as derived checks.
    """
    size = cbar.rows
    if cbar.cols != size or growth.rows != size or growth.cols != size:
        raise DimensionMismatchError(
            f"c̄ is {cbar.rows}x{cbar.cols}, growth is {growth.rows}x{growth.cols}"
        )
    if vertex_fpolys is not None and len(vertex_fpolys) != size:
        raise DimensionMismatchError("one f-polynomial per orbit is required")
    names = [str(o) for o in orbit_ids] if orbit_ids is not None else [str(i) for i in range(size)]

    if isinstance(growth, SeriesMatrix):
        return _verify_truncated(cbar, growth, names)

    product_matrix = mat_mul(cbar, growth)
    failures = [
        CellFailure(
            row=names[i],
            col=names[j],
            expected=_delta(i, j).canonical(),
            actual=product_matrix[i, j].canonical(),
        )
        for i in range(size)
        for j in range(size)
        if product_matrix[i, j] != _delta(i, j)
    ]
    report = GrowthReport(
        mode="exact",
        orbit_ids=names,
        cbar=cbar,
        growth=growth,
        per_row_safe_degree=[None] * size,
        failures=failures,
        derived=_derived_checks(cbar, growth, names, vertex_fpolys),
    )
    logger.info("Exact verification: %d failing cells", len(failures))
    return report


def _derived_checks(
    cbar: RatMatrix,
    growth: RatMatrix,
    names: list[str],
    vertex_fpolys: Sequence[Polynomial] | None,
) -> list[DerivedCheck]:
    size = cbar.rows
    full = full_growth_series(growth)
    checks = []

    bad = [
        names[x] for x in range(size) if rf_sum(cbar[x, y] * full[y] for y in range(size)) != ONE
    ]
    checks.append(
        DerivedCheck("summed_growth", not bad, "rows " + " ".join(bad) if bad else "")
    )
    if vertex_fpolys is None:
        return checks

    weights = [davis_value(f) for f in vertex_fpolys]
    sums = cbar.row_sums()
    bad = [names[x] for x in range(size) if sums[x] != weights[x]]
    checks.append(DerivedCheck("row_sums", not bad, "rows " + " ".join(bad) if bad else ""))

    total = rf_sum(weights[x] * full[x] for x in range(size))
    checks.append(
        DerivedCheck(
            "weighted_full_growth",
            total == RationalFunction(size),
            f"got {total.canonical()}, expected {size}",
        )
    )

    if cbar.is_symmetric():
        bad = [
            names[z]
            for z in range(size)
            if rf_sum(weights[y] * growth[y, z] for y in range(size)) != ONE
        ]
        checks.append(
            DerivedCheck("weighted_columns", not bad, "columns " + " ".join(bad) if bad else "")
        )
    return checks


def _verify_truncated(cbar: RatMatrix, growth: SeriesMatrix, names: list[str]) -> GrowthReport:
    size = cbar.rows
    top = growth.degree
    series = [[rf_series(cbar[x, y], top) for y in range(size)] for x in range(size)]
    failures: list[CellFailure] = []
    for x in range(size):
        support = [y for y in range(size) if not cbar[x, y].is_zero]
        bound = min((growth.per_row_degree[y] for y in support), default=top)
        for z in range(size):
            total = [Fraction(0)] * (top + 1)
            for y in support:
                for k, value in enumerate(series_mul(series[x][y], growth[y, z], top)):
                    total[k] += value
            for k in range(bound + 1):
                expected = Fraction(1 if (k == 0 and x == z) else 0)
                if total[k] != expected:
                    failures.append(
                        CellFailure(
                            row=names[x],
                            col=names[z],
                            expected=str(expected),
                            actual=str(total[k]),
                            degree=k,
                        )
                    )
                    break
    logger.info("Truncated verification to degree %d: %d failing cells", top, len(failures))
    return GrowthReport(
        mode="truncated",
        orbit_ids=names,
        cbar=cbar,
        growth=growth,
        per_row_safe_degree=list(growth.per_row_degree),
        failures=failures,
        degree=top,
    )


def vertex_fpolys(space: CubeComplex | LabeledBall) -> list[Polynomial]:
    """f-polynomials of the vertex links, per orbit lift (or per sorted vertex)."""
    if isinstance(space, LabeledBall):
        result = []
        for orbit in space.orbit_ids:
            lift = space.lift[orbit]
            space.require_star_complete(lift)
            result.append(f_polynomial(vertex_link(space.complex, lift)))
        return result
    return [f_polynomial(vertex_link(space, x)) for x in space.sorted_vertices()]


def sum_coefficients(space: CubeComplex | LabeledBall, x: Hashable) -> SumCheck:
    """Σ_y c_xy compared against f_x(-t/(1+t))."""
    complex_ = _unwrap(space, x)
    total = rf_sum(coefficients_at(complex_, x).values())
    expected = davis_value(f_polynomial(vertex_link(complex_, x)))
    return SumCheck(vertex=str(x), total=total, expected=expected)


def davis_growth_closed(nerve: SimplicialComplex) -> RationalFunction:
    """1/f(-t/(1+t)): growth series of the right-angled Coxeter group with this nerve.

    Raises:
        NonFlagNerveError: If the nerve is not flag.
    """
    clique = non_flag_witness(nerve)
    if clique is not None:
        raise NonFlagNerveError(
            "nerve is not flag", field="clique", value=" ".join(str(v) for v in clique)
        )
    return ONE / davis_value(f_polynomial(nerve))


def reciprocity_check(r: RationalFunction, n: int) -> bool:
    """Exact test of r(1/t) = (-1)^n r(t)."""
    return rf_invert_t(r) == r * ((-1) ** n)


def reciprocity_matrix(
    matrix: RatMatrix, n: int, orbit_ids: Sequence[Hashable] | None = None
) -> ReciprocityResult:
    names = [str(o) for o in orbit_ids] if orbit_ids is not None else None
    failures = []
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            if not reciprocity_check(matrix[i, j], n):
                failures.append(f"({names[i]}, {names[j]})" if names else f"({i}, {j})")
    return ReciprocityResult(n=n, checked=matrix.rows * matrix.cols, failures=failures)


def symmetry_check(matrix: RatMatrix) -> DerivedCheck:
    return DerivedCheck("symmetric", matrix.is_symmetric())


def vertex_transitive_check(fpolys: Sequence[Polynomial], growth: RatMatrix) -> DerivedCheck:
    """With equal vertex links, every full series satisfies G_x · f(-t/(1+t)) = 1."""
    if len(set(fpolys)) != 1:
        return DerivedCheck("equal_links", False, "vertex links have different f-polynomials")
    weight = davis_value(fpolys[0])
    bad = [str(x) for x, g in enumerate(full_growth_series(growth)) if g * weight != ONE]
    return DerivedCheck("equal_links", not bad, "rows " + " ".join(bad) if bad else "")


def euler_trace(fpolys: Sequence[Polynomial]) -> Fraction:
    """Σ_x f_x(-1/2): the trace of (c̄_xy) at t = √-1, where t²/(1-t²) = -1/2."""
    return sum((f.evaluate(TRACE_POINT) for f in fpolys), Fraction(0))


def stars_embed(ball: LabeledBall) -> bool:
    """True iff the label map is injective on the star of every lift."""
    for orbit in ball.orbit_ids:
        lift = ball.lift[orbit]
        ball.require_star_complete(lift)
        labels = [ball.label[v] for v in star(ball.complex, lift).vertices]
        if len(labels) != len(set(labels)):
            logger.debug("Star of %s is not embedded in the quotient", lift)
            return False
    return True


def euler_trace_check(ball: LabeledBall) -> EulerTraceResult:
    return EulerTraceResult(
        trace=euler_trace(vertex_fpolys(ball)),
        euler_char=ball.quotient_euler,
        stars_embed=stars_embed(ball),
    )
