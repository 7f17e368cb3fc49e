"""
generators.py

Objetivo del script:
Builders for labeled test instances: balls in the Davis complex of a
right-angled Coxeter group and in the universal cover of a right-angled Artin
group complex (both through graph-product normal forms), subdivided torus
balls with a Z^n labeling, finite complexes with the trivial action, products
of balls, and closed subdivided tori.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
import re
from collections import deque
from collections.abc import Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from itertools import product as cartesian

import networkx as nx

from cubegrowth.cubical import (
    Cube,
    CubeComplex,
    LabeledBall,
    Truncation,
    cat0_witness,
    euler_char_cc,
    make_cube_complex,
    product,
)
from cubegrowth.exceptions import PreconditionError, StructuralError, UnknownCellError
from cubegrowth.models import BallStats
from cubegrowth.simplicial import SimplicialComplex, skeleton_graph

logger = logging.getLogger(__name__)

GENERATOR_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
IDENTITY = "1"

Letter = tuple[str, int]
Word = tuple[Letter, ...]


class GeneratorOrder(str, Enum):
    TWO = "2"
    INFINITE = "inf"


@dataclass(frozen=True, eq=False)
class ProductGraph:
    """Commutation graph of a right-angled graph product; nodes carry an ``order``."""

    graph: nx.Graph

    @classmethod
    def build(
        cls,
        generators: Mapping[str, GeneratorOrder | str],
        edges: Iterable[tuple[str, str]] = (),
    ) -> ProductGraph:
        graph = nx.Graph()
        for name, order in generators.items():
            if not GENERATOR_NAME.match(name):
                raise PreconditionError("invalid generator name", field="generator", value=name)
            try:
                graph.add_node(name, order=GeneratorOrder(order))
            except ValueError as exc:
                raise PreconditionError(
                    "order must be 2 or inf", field="order", value=order
                ) from exc
        for a, b in edges:
            if a == b:
                raise PreconditionError("self-loop in product graph", field="edge", value=(a, b))
            for name in (a, b):
                if name not in graph:
                    raise UnknownCellError("unknown generator", field="generator", value=name)
            graph.add_edge(a, b)
        return cls(graph)

    @property
    def generators(self) -> list[str]:
        return sorted(self.graph.nodes)

    def order(self, generator: str) -> GeneratorOrder:
        return self.graph.nodes[generator]["order"]

    def commute(self, a: str, b: str) -> bool:
        return self.graph.has_edge(a, b)

    def letters(self) -> list[Letter]:
        """Edge labels at every vertex, in letter order."""
        result: list[Letter] = []
        for name in self.generators:
            result.append((name, 1))
            if self.order(name) is GeneratorOrder.INFINITE:
                result.append((name, -1))
        return result

    @property
    def clique_number(self) -> int:
        return max((len(c) for c in nx.find_cliques(self.graph)), default=0)

    def all_orders(self, order: GeneratorOrder) -> bool:
        return all(self.order(name) is order for name in self.generators)


def graph_from_nerve(nerve: SimplicialComplex) -> ProductGraph:
    """All-order-two product graph on the 1-skeleton of a nerve."""
    skeleton = skeleton_graph(nerve)
    rename = {
        v: str(v) if GENERATOR_NAME.match(str(v)) else f"s{v}" for v in skeleton.nodes
    }
    return ProductGraph.build(
        {name: GeneratorOrder.TWO for name in rename.values()},
        [(rename[a], rename[b]) for a, b in skeleton.edges],
    )


def _letter_key(letter: Letter) -> tuple[str, int]:
    return (letter[0], 0 if letter[1] == 1 else 1)


def _normalize_letter(graph: ProductGraph, letter: Letter) -> Letter:
    name, exponent = letter
    if name not in graph.graph:
        raise UnknownCellError("unknown generator", field="generator", value=name)
    if exponent not in (1, -1):
        raise PreconditionError(
            "letter exponent must be +1 or -1", field="exponent", value=exponent
        )
    if graph.order(name) is GeneratorOrder.TWO:
        return (name, 1)
    return (name, exponent)


def _append_reduced(graph: ProductGraph, word: list[Letter], letter: Letter) -> None:
    """Append to a reduced word, cancelling against a letter that can shuffle to the end."""
    name, exponent = letter
    for index in range(len(word) - 1, -1, -1):
        other, other_exponent = word[index]
        if other == name:
            cancels = graph.order(name) is GeneratorOrder.TWO or other_exponent == -exponent
            if cancels:
                del word[index]
                return
            break
        if not graph.commute(other, name):
            break
    word.append(letter)


def _lex_min(graph: ProductGraph, word: list[Letter]) -> Word:
    remaining = list(word)
    result: list[Letter] = []
    while remaining:
        best = None
        seen: list[str] = []
        for index, (name, exponent) in enumerate(remaining):
            if all(graph.commute(prev, name) for prev in seen):
                if best is None or _letter_key(remaining[best]) > _letter_key(
                    (name, exponent)
                ):
                    best = index
            seen.append(name)
        result.append(remaining.pop(best))
    return tuple(result)


def normal_form(word: Sequence[Letter], graph: ProductGraph) -> Word:
    """Shortlex normal form under commutation, free cancellation and s·s = 1 for order two."""
    reduced: list[Letter] = []
    for letter in word:
        _append_reduced(graph, reduced, _normalize_letter(graph, letter))
    return _lex_min(graph, reduced)


def render_word(word: Word) -> str:
    if not word:
        return IDENTITY
    return "*".join(name if exponent == 1 else f"{name}^-1" for name, exponent in word)


def parse_word(text: str) -> list[Letter]:
    text = text.strip()
    if text in ("", IDENTITY):
        return []
    letters = []
    for token in text.split("*"):
        name, _, power = token.strip().partition("^")
        if power not in ("", "1", "-1"):
            raise PreconditionError("letter exponent must be +1 or -1", field="word", value=text)
        letters.append((name, -1 if power == "-1" else 1))
    return letters


def salvetti_euler(graph: ProductGraph) -> int:
    """χ of the one-vertex RAAG complex: Σ over cliques (empty included) of (-1)^|K|."""
    return 1 + sum((-1) ** len(clique) for clique in nx.enumerate_all_cliques(graph.graph))


def graph_product_ball(graph: ProductGraph, radius: int) -> LabeledBall:
    """Ball of radius R about the identity, vertices named by normal forms.

    Cubes are the cliques of commuting letters applied at each vertex, with
    positive exponents, kept when every corner is inside the ball. All
    vertices form a single orbit.
    """
    if radius < 1:
        raise PreconditionError("ball radius must be >= 1", field="radius", value=radius)
    steps: dict[tuple[Word, Letter], Word] = {}

    def step(element: Word, letter: Letter) -> Word:
        key = (element, letter)
        if key not in steps:
            reduced = list(element)
            _append_reduced(graph, reduced, letter)
            steps[key] = _lex_min(graph, reduced)
        return steps[key]

    letters = graph.letters()
    depth: dict[Word, int] = {(): 0}
    queue: deque[Word] = deque([()])
    while queue:
        element = queue.popleft()
        if depth[element] == radius:
            continue
        for letter in letters:
            neighbour = step(element, letter)
            if neighbour not in depth:
                depth[neighbour] = depth[element] + 1
                queue.append(neighbour)

    cliques = [sorted(c) for c in nx.enumerate_all_cliques(graph.graph)]
    cells: dict[frozenset, Cube] = {}
    for element in depth:
        name = render_word(element)
        cells[frozenset([name])] = Cube((name,))
        for clique in cliques:
            corners = []
            for mask in range(1 << len(clique)):
                corner = element
                for axis, generator in enumerate(clique):
                    if mask >> axis & 1:
                        corner = step(corner, (generator, 1))
                if corner not in depth:
                    break
                corners.append(render_word(corner))
            else:
                cube = Cube(tuple(corners))
                cells.setdefault(cube.vertex_set, cube)

    complex_ = CubeComplex(cells)
    quotient_euler = (
        salvetti_euler(graph) if graph.all_orders(GeneratorOrder.INFINITE) else None
    )
    logger.info("Graph product ball of radius %d: %d vertices", radius, len(depth))
    return LabeledBall.build(
        complex_,
        IDENTITY,
        radius,
        graph.clique_number,
        {render_word(element): IDENTITY for element in depth},
        quotient_euler=quotient_euler,
    )


def _unit_cube(origin: tuple[int, ...], axes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    corners = []
    for mask in range(1 << len(axes)):
        point = list(origin)
        for position, axis in enumerate(axes):
            if mask >> position & 1:
                point[axis] += 1
        corners.append(tuple(point))
    return tuple(corners)


def torus_ball(n: int, k: int, radius: int) -> LabeledBall:
    """ℓ1-ball in the unit cubulation of R^n, labeled by residues mod k."""
    if n < 1 or k < 2 or radius < 0:
        raise PreconditionError("torus ball needs n >= 1, k >= 2, R >= 0", field="k", value=k)
    points = [
        p for p in cartesian(range(-radius, radius + 1), repeat=n) if sum(map(abs, p)) <= radius
    ]
    inside = set(points)
    cells: dict[frozenset, Cube] = {}
    axis_sets = [
        tuple(axis for axis in range(n) if mask >> axis & 1) for mask in range(1 << n)
    ]
    for point in points:
        for axes in axis_sets:
            corners = _unit_cube(point, axes)
            if all(c in inside for c in corners):
                cube = Cube(corners)
                cells[cube.vertex_set] = cube
    return LabeledBall.build(
        CubeComplex(cells),
        (0,) * n,
        radius,
        n,
        {p: tuple(c % k for c in p) for p in points},
        quotient_euler=0,
    )


def torus_complex(n: int, k: int) -> CubeComplex:
    """The k-subdivided n-torus, vertices (Z/k)^n."""
    if n < 1 or k < 3:
        raise PreconditionError("closed torus needs n >= 1 and k >= 3", field="k", value=k)
    axes = tuple(range(n))
    return make_cube_complex(
        tuple(tuple(c % k for c in corner) for corner in _unit_cube(origin, axes))
        for origin in cartesian(range(k), repeat=n)
    )


def finite_as_labeled(
    complex_: CubeComplex, base: Hashable | None = None, median_limit: int | None = None
) -> LabeledBall:
    """Trivially labeled window covering a finite CAT(0) complex.

    The median scan is skipped above ``median_limit`` vertices.

    Raises:
        StructuralError: If the complex is not CAT(0).
    """
    witness = cat0_witness(complex_, median_limit)
    if witness is not None:
        raise StructuralError("finite window needs a CAT(0) complex", witness=str(witness))
    if base is None:
        base = complex_.sorted_vertices()[0]
    radius = max(complex_.distances_from(base).values())
    return LabeledBall.build(
        complex_,
        base,
        radius,
        complex_.dimension,
        {v: v for v in complex_.vertices},
        quotient_euler=euler_char_cc(complex_),
        complete=True,
    )


def product_ball(first: LabeledBall, second: LabeledBall) -> LabeledBall:
    """Product window of two labeled windows.

    A complete factor is kept whole and the cut follows the other factor
    alone. Two cut factors give the ℓ1 window of radius min(R1, R2), measured
    with each factor's own truncation depth.
    """
    complex_ = product(first.complex, second.complex)
    quotient_euler = None
    if first.quotient_euler is not None and second.quotient_euler is not None:
        quotient_euler = first.quotient_euler * second.quotient_euler
    truncation = None
    if first.complete and second.complete:
        radius = first.radius + second.radius
    elif first.complete or second.complete:
        cut = second if first.complete else first
        position = 1 if first.complete else 0
        radius = first.radius + second.radius
        truncation = Truncation(
            depth={v: cut.truncation_depth(v[position]) for v in complex_.vertices},
            radius=cut.truncation_radius,
            dim=cut.truncation_dim,
        )
    else:
        cut_radius = min(first.truncation_radius, second.truncation_radius)
        depth = {
            (a, b): first.truncation_depth(a) + second.truncation_depth(b)
            for a, b in complex_.vertices
        }
        complex_ = complex_.restrict(v for v, d in depth.items() if d <= cut_radius)
        radius = cut_radius
        if first.truncation is not None or second.truncation is not None:
            radius = max(complex_.distances_from((first.base, second.base)).values())
            truncation = Truncation(
                depth={v: depth[v] for v in complex_.vertices},
                radius=cut_radius,
                dim=first.truncation_dim + second.truncation_dim,
            )
    logger.info("Product window: %d vertices, radius %d", len(complex_.vertices), radius)
    return LabeledBall.build(
        complex_,
        (first.base, second.base),
        radius,
        first.dim + second.dim,
        {(a, b): (first.label[a], second.label[b]) for a, b in complex_.vertices},
        quotient_euler=quotient_euler,
        complete=first.complete and second.complete,
        truncation=truncation,
    )


def sphere_sizes(ball: LabeledBall) -> list[int]:
    sizes = [0] * (ball.radius + 1)
    for d in ball.complex.distances_from(ball.base).values():
        sizes[d] += 1
    return sizes


def ball_stats(ball: LabeledBall) -> BallStats:
    return BallStats(
        radius=ball.radius,
        dim=ball.dim,
        vertex_count=len(ball.complex.vertices),
        orbit_count=len(ball.lift),
        star_complete_radius=ball.star_complete_radius,
        sphere_sizes=sphere_sizes(ball),
        cube_counts=ball.complex.cell_counts(),
    )
