"""
cubical.py

Objetivo del script:
Finite cube complexes built from maximal cubes: stars, vertex and cube links,
spanned cubes, graph distance, NPC and CAT(0) checks, products, the star
decomposition along an edge, and labeled balls that window an infinite
complex with a group action.

Cube corners are indexed by binary coordinates: corner b of a k-cube sits at
bit j = coordinate along axis j. Cubes are identified by their vertex sets.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from cubegrowth.exceptions import (
    DisconnectedError,
    PreconditionError,
    StarIncompleteError,
    StructuralError,
    UnknownCellError,
)
from cubegrowth.models import Cat0Witness
from cubegrowth.simplicial import (
    SimplicialComplex,
    is_eulerian_sphere,
    non_flag_witness,
    sort_key,
    sorted_vertices,
)

logger = logging.getLogger(__name__)

Vertex = Hashable
CellKey = frozenset


@dataclass(frozen=True, eq=False)
class Cube:
    corners: tuple[Vertex, ...]
    vertex_set: CellKey = field(init=False, repr=False)

    def __post_init__(self) -> None:
        count = len(self.corners)
        if count == 0 or count & (count - 1):
            raise PreconditionError(
                "a cube needs 2^k corners", field="corners", value=list(self.corners)
            )
        vertex_set = frozenset(self.corners)
        if len(vertex_set) != count:
            raise PreconditionError(
                "cube corners must be distinct", field="corners", value=list(self.corners)
            )
        object.__setattr__(self, "vertex_set", vertex_set)

    @property
    def dim(self) -> int:
        return len(self.corners).bit_length() - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cube):
            return NotImplemented
        return self.vertex_set == other.vertex_set

    def __hash__(self) -> int:
        return hash(self.vertex_set)

    def __contains__(self, vertex: Vertex) -> bool:
        return vertex in self.vertex_set

    def index_of(self, vertex: Vertex) -> int:
        return self.corners.index(vertex)

    def face(self, free_axes: Sequence[int], anchor: int) -> Cube:
        """Face spanned by ``free_axes`` through the corner with index ``anchor``."""
        mask = sum(1 << axis for axis in free_axes)
        base = anchor & ~mask
        corners = []
        for sub in range(1 << len(free_axes)):
            index = base
            for position, axis in enumerate(free_axes):
                if sub >> position & 1:
                    index |= 1 << axis
            corners.append(self.corners[index])
        return Cube(tuple(corners))

    def faces(self) -> Iterator[Cube]:
        """Every face, the cube itself included."""
        for size in range(self.dim + 1):
            for free_axes in combinations(range(self.dim), size):
                mask = sum(1 << axis for axis in free_axes)
                for anchor in range(len(self.corners)):
                    if anchor & mask == 0:
                        yield self.face(free_axes, anchor)

    def neighbours_of(self, vertex: Vertex) -> list[Vertex]:
        index = self.index_of(vertex)
        return [self.corners[index ^ (1 << axis)] for axis in range(self.dim)]

    def edge_set(self) -> frozenset[CellKey]:
        return frozenset(f.vertex_set for f in self.faces() if f.dim == 1)

    def sorted_corners(self) -> list[Vertex]:
        return sorted_vertices(self.corners)


class CubeComplex:
    """Face-closed set of cubes with its 1-skeleton graph.

    Treat instances as immutable; the only mutable state is a per-source
    BFS cache.
    """

    def __init__(self, cubes: Mapping[CellKey, Cube]) -> None:
        self._cubes: dict[CellKey, Cube] = dict(cubes)
        self._graph = nx.Graph()
        self._incident: dict[Vertex, list[Cube]] = {}
        for cube in self._cubes.values():
            if cube.dim == 0:
                self._graph.add_node(cube.corners[0])
            elif cube.dim == 1:
                self._graph.add_edge(*cube.corners)
            for vertex in cube.corners:
                self._incident.setdefault(vertex, []).append(cube)
        self._bfs: dict[Vertex, dict[Vertex, int]] = {}

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def cubes(self) -> list[Cube]:
        return sorted(self._cubes.values(), key=_cube_order)

    @property
    def vertices(self) -> frozenset[Vertex]:
        return frozenset(self._incident)

    def sorted_vertices(self) -> list[Vertex]:
        return sorted_vertices(self._incident)

    @property
    def dimension(self) -> int:
        return max((c.dim for c in self._cubes.values()), default=-1)

    def __len__(self) -> int:
        return len(self._cubes)

    def has_vertex(self, vertex: Vertex) -> bool:
        return vertex in self._incident

    def has_cell(self, vertex_set: Iterable[Vertex]) -> bool:
        return frozenset(vertex_set) in self._cubes

    def cell(self, vertex_set: Iterable[Vertex]) -> Cube:
        key = frozenset(vertex_set)
        if key not in self._cubes:
            raise UnknownCellError("no such cube", field="cube", value=sorted_vertices(key))
        return self._cubes[key]

    def cell_keys(self) -> frozenset[CellKey]:
        return frozenset(self._cubes)

    def cubes_containing(self, vertex: Vertex) -> list[Cube]:
        self._require_vertex(vertex)
        return list(self._incident[vertex])

    def maximal_cubes(self) -> list[Cube]:
        maximal = []
        for cube in self._cubes.values():
            anchor = cube.corners[0]
            if not any(
                other.dim == cube.dim + 1 and cube.vertex_set < other.vertex_set
                for other in self._incident[anchor]
            ):
                maximal.append(cube)
        return sorted(maximal, key=_cube_order)

    def cell_counts(self) -> list[int]:
        counts = [0] * (self.dimension + 1)
        for cube in self._cubes.values():
            counts[cube.dim] += 1
        return counts

    def is_connected(self) -> bool:
        return len(self._graph) > 0 and nx.is_connected(self._graph)

    def distances_from(self, source: Vertex) -> dict[Vertex, int]:
        self._require_vertex(source)
        if source not in self._bfs:
            self._bfs[source] = nx.single_source_shortest_path_length(self._graph, source)
        return self._bfs[source]

    def distance(self, x: Vertex, y: Vertex) -> int:
        self._require_vertex(y)
        reach = self.distances_from(x)
        if y not in reach:
            raise DisconnectedError(
                "vertices lie in different components", field="pair", value=(x, y)
            )
        return reach[y]

    def restrict(self, vertices: Iterable[Vertex]) -> CubeComplex:
        """Subcomplex of every cube whose corners all lie in ``vertices``."""
        keep = set(vertices)
        return CubeComplex({k: c for k, c in self._cubes.items() if k <= keep})

    def _require_vertex(self, vertex: Vertex) -> None:
        if vertex not in self._incident:
            raise UnknownCellError("unknown vertex", field="vertex", value=vertex)

    def __repr__(self) -> str:
        return f"CubeComplex(vertices={len(self._incident)}, cells={self.cell_counts()})"


def _cube_order(cube: Cube) -> tuple:
    return (cube.dim, [sort_key(v) for v in cube.sorted_corners()])


def _close(cubes: Iterable[Cube]) -> dict[CellKey, Cube]:
    closed: dict[CellKey, Cube] = {}
    for cube in cubes:
        if cube.vertex_set in closed:
            continue
        for face in cube.faces():
            closed.setdefault(face.vertex_set, face)
    return closed


def make_cube_complex(maximal_cubes: Iterable[Sequence[Vertex]]) -> CubeComplex:
    """Build and validate a cube complex from corner sequences.

    Raises:
        PreconditionError: On a bad corner count or repeated corners.
        StructuralError: When two cubes are glued other than along a common face.
    """
    given = [c if isinstance(c, Cube) else Cube(tuple(c)) for c in maximal_cubes]
    closed: dict[CellKey, Cube] = {}
    edges_of: dict[CellKey, frozenset[CellKey]] = {}
    faces_of: list[frozenset[CellKey]] = []
    for cube in given:
        keys = set()
        for face in cube.faces():
            keys.add(face.vertex_set)
            if face.dim < 2:
                closed.setdefault(face.vertex_set, face)
                continue
            edges = face.edge_set()
            known = edges_of.get(face.vertex_set)
            if known is None:
                edges_of[face.vertex_set] = edges
                closed[face.vertex_set] = face
            elif known != edges:
                raise StructuralError(
                    "inconsistent face gluing: one vertex set carries two cube structures",
                    witness=face.sorted_corners(),
                )
        faces_of.append(frozenset(keys))

    by_vertex: dict[Vertex, list[int]] = {}
    for position, cube in enumerate(given):
        for vertex in cube.corners:
            by_vertex.setdefault(vertex, []).append(position)
    checked: set[tuple[int, int]] = set()
    for positions in by_vertex.values():
        for i, j in combinations(positions, 2):
            if (i, j) in checked:
                continue
            checked.add((i, j))
            common = given[i].vertex_set & given[j].vertex_set
            if common not in faces_of[i] or common not in faces_of[j]:
                raise StructuralError(
                    "two cubes intersect outside a common face",
                    witness=sorted_vertices(common),
                )

    complex_ = CubeComplex(closed)
    logger.debug("Built cube complex %r from %d cubes", complex_, len(given))
    return complex_


def distance(complex_: CubeComplex, x: Vertex, y: Vertex) -> int:
    return complex_.distance(x, y)


def star(complex_: CubeComplex, x: Vertex) -> CubeComplex:
    return CubeComplex(_close(complex_.cubes_containing(x)))


def _link_of_cell(complex_: CubeComplex, cell: Cube) -> tuple[SimplicialComplex, int]:
    """Link of ``cell`` and the number of simplices that were generated twice."""
    anchor = min(cell.corners, key=sort_key)
    simplices: list[frozenset[Vertex]] = []
    for cube in complex_.cubes_containing(anchor):
        if cube.dim <= cell.dim or not cell.vertex_set <= cube.vertex_set:
            continue
        simplices.append(
            frozenset(v for v in cube.neighbours_of(anchor) if v not in cell.vertex_set)
        )
    repeats = len(simplices) - len(set(simplices))
    return SimplicialComplex.from_facets(simplices), repeats


def vertex_link(complex_: CubeComplex, x: Vertex) -> SimplicialComplex:
    """Link of x; its vertices are the neighbours of x along the edges at x."""
    return _link_of_cell(complex_, complex_.cell([x]))[0]


def cube_link(complex_: CubeComplex, cell: Cube | Iterable[Vertex]) -> SimplicialComplex:
    key = cell.vertex_set if isinstance(cell, Cube) else frozenset(cell)
    return _link_of_cell(complex_, complex_.cell(key))[0]


def spanned_cube(complex_: CubeComplex, x: Vertex, y: Vertex) -> Cube | None:
    """Unique minimal cube containing x and y, or None.

    Raises:
        StructuralError: If two different minimal cubes contain both.
    """
    if x == y:
        return complex_.cell([x])
    complex_._require_vertex(y)
    found: dict[CellKey, Cube] = {}
    for cube in complex_.cubes_containing(x):
        if y not in cube:
            continue
        ix, iy = cube.index_of(x), cube.index_of(y)
        differing = [axis for axis in range(cube.dim) if (ix ^ iy) >> axis & 1]
        minimal = cube.face(differing, ix)
        found[minimal.vertex_set] = minimal
    if not found:
        return None
    if len(found) > 1:
        raise StructuralError(
            "ambiguous spanned cube",
            witness=[c.sorted_corners() for c in sorted(found.values(), key=_cube_order)],
        )
    return complex_.cell(next(iter(found)))


def npc_witness(complex_: CubeComplex) -> Cat0Witness | None:
    for x in complex_.sorted_vertices():
        link_x, repeats = _link_of_cell(complex_, complex_.cell([x]))
        if repeats:
            return Cat0Witness("non_simplicial_link", (str(x),), f"{repeats} repeated simplices")
        clique = non_flag_witness(link_x)
        if clique is not None:
            return Cat0Witness(
                "non_flag_link",
                (str(x),),
                "empty simplex on " + " ".join(str(v) for v in clique),
            )
    return None


def is_npc(complex_: CubeComplex) -> bool:
    return npc_witness(complex_) is None


def _median_witness(complex_: CubeComplex) -> Cat0Witness | None:
    order = complex_.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    size = len(order)
    dist = [[0] * size for _ in range(size)]
    for v in order:
        row = dist[index[v]]
        for w, d in complex_.distances_from(v).items():
            row[index[w]] = d
    interval = [[0] * size for _ in range(size)]
    for u in range(size):
        du = dist[u]
        for v in range(u, size):
            dv = dist[v]
            target = du[v]
            mask = 0
            for m in range(size):
                if du[m] + dv[m] == target:
                    mask |= 1 << m
            interval[u][v] = interval[v][u] = mask
    for u, v, w in combinations(range(size), 3):
        medians = interval[u][v] & interval[v][w] & interval[u][w]
        if medians.bit_count() != 1:
            found = [str(order[m]) for m in range(size) if medians >> m & 1]
            return Cat0Witness(
                "median",
                (str(order[u]), str(order[v]), str(order[w])),
                f"{len(found)} medians" + (": " + " ".join(found) if found else ""),
            )
    return None


def _square_witness(complex_: CubeComplex) -> Cat0Witness | None:
    graph = complex_.graph
    for x in complex_.sorted_vertices():
        around = sorted_vertices(graph.neighbors(x))
        for y, z in combinations(around, 2):
            for w in sorted_vertices(nx.common_neighbors(graph, y, z)):
                if w != x and not complex_.has_cell([x, y, z, w]):
                    return Cat0Witness(
                        "unfilled_square",
                        (str(y), str(x), str(z), str(w)),
                        "graph 4-cycle bounds no square",
                    )
    return None


def cat0_witness(complex_: CubeComplex, median_limit: int | None = None) -> Cat0Witness | None:
    """First reason the complex fails to be CAT(0), or None.

    Checks in order: connectivity, unique medians for every vertex triple,
    every graph 4-cycle filled by a square, and flag vertex links. The cubic
    median scan is skipped above ``median_limit`` vertices.
    """
    order = complex_.sorted_vertices()
    if not order:
        return Cat0Witness("empty", (), "no vertices")
    reach = complex_.distances_from(order[0])
    if len(reach) != len(order):
        stray = next(v for v in order if v not in reach)
        return Cat0Witness("disconnected", (str(order[0]), str(stray)))
    if median_limit is not None and len(order) > median_limit:
        logger.warning(
            "Median check skipped: %d vertices above limit %d", len(order), median_limit
        )
    else:
        witness = _median_witness(complex_)
        if witness is not None:
            return witness
    return _square_witness(complex_) or npc_witness(complex_)


def is_cat0(complex_: CubeComplex, median_limit: int | None = None) -> bool:
    return cat0_witness(complex_, median_limit) is None


def product(first: CubeComplex, second: CubeComplex) -> CubeComplex:
    """Cartesian product with pairs as vertices.

    Corner i pairs corner ``i mod 2^dim(a)`` of a with corner ``i >> dim(a)`` of b.
    """
    cells: dict[CellKey, Cube] = {}
    for a in first.cubes:
        for b in second.cubes:
            corners = tuple(
                (a.corners[i & (len(a.corners) - 1)], b.corners[i >> a.dim])
                for i in range(len(a.corners) * len(b.corners))
            )
            cube = Cube(corners)
            cells[cube.vertex_set] = cube
    return CubeComplex(cells)


def euler_char_cc(complex_: CubeComplex) -> int:
    return sum((-1) ** dim * count for dim, count in enumerate(complex_.cell_counts()))


def is_eulerian_manifold_cc(complex_: CubeComplex, n: int) -> bool:
    if any(cube.dim != n for cube in complex_.maximal_cubes()):
        return False
    for cube in complex_.cubes:
        if cube.dim < n and not is_eulerian_sphere(cube_link(complex_, cube), n - cube.dim - 1):
            logger.debug("Cube %s fails the Eulerian link test", cube.sorted_corners())
            return False
    return True


def star_edge_decomposition(
    star_complex: CubeComplex, x: Vertex, z: Vertex
) -> tuple[CubeComplex, CubeComplex, CubeComplex]:
    """Split a star at x along the edge [x, z].

    Returns (A, B, C): A is the star of the edge, B holds the cubes at x that
    miss z, and C = A ∩ B. All three are stars of x and A ∪ B is the input.
    """
    if not star_complex.has_cell([x, z]) or x == z:
        raise PreconditionError("z must be adjacent to x", field="z", value=z)
    at_x = star_complex.cubes_containing(x)
    if _close(at_x).keys() != star_complex.cell_keys():
        raise PreconditionError("input is not the star of x", field="x", value=x)
    part_a = _close(c for c in at_x if z in c)
    part_b = _close(c for c in at_x if z not in c)
    part_c = {key: part_a[key] for key in part_a.keys() & part_b.keys()}
    return CubeComplex(part_a), CubeComplex(part_b), CubeComplex(part_c)


@dataclass(frozen=True)
class Truncation:
    """Where a window is cut off when that differs from plain depth about the base.

    ``depth`` maps each vertex to its depth in the truncated factor; ``radius``
    and ``dim`` are that factor's radius and dimension.
    """

    depth: Mapping[Vertex, int]
    radius: int
    dim: int


@dataclass(frozen=True, eq=False)
class LabeledBall:
    """Radius-R window of a cube complex with an orbit label on every vertex.

    ``complete`` marks windows that are the whole complex (every star is
    present and rows have no truncation limit). ``truncation`` is set when
    only part of the window is cut off, as in the product of a finite complex
    with a ball; otherwise the cut is at depth ``radius`` about the base.
    """

    complex: CubeComplex
    base: Vertex
    radius: int
    dim: int
    label: Mapping[Vertex, Hashable]
    lift: Mapping[Hashable, Vertex]
    quotient_euler: int | None = None
    quotient_vertex_count: int = 0
    complete: bool = False
    truncation: Truncation | None = None

    @classmethod
    def build(
        cls,
        complex_: CubeComplex,
        base: Vertex,
        radius: int,
        dim: int,
        label: Mapping[Vertex, Hashable],
        *,
        quotient_euler: int | None = None,
        complete: bool = False,
        truncation: Truncation | None = None,
    ) -> LabeledBall:
        """Choose lifts at minimal distance from base, ties by vertex order."""
        reach = complex_.distances_from(base)
        missing = [v for v in complex_.vertices if v not in label]
        if missing:
            raise PreconditionError("every vertex needs a label", field="label", value=missing[:3])
        lift: dict[Hashable, Vertex] = {}
        for vertex in complex_.sorted_vertices():
            if vertex not in reach or reach[vertex] > radius:
                raise PreconditionError(
                    "ball vertex outside the radius", field="vertex", value=vertex
                )
            orbit = label[vertex]
            current = lift.get(orbit)
            if current is None or (reach[vertex], sort_key(vertex)) < (
                reach[current],
                sort_key(current),
            ):
                lift[orbit] = vertex
        return cls(
            complex=complex_,
            base=base,
            radius=radius,
            dim=dim,
            label=dict(label),
            lift=lift,
            quotient_euler=quotient_euler,
            quotient_vertex_count=len(lift),
            complete=complete,
            truncation=truncation,
        )

    @property
    def orbit_ids(self) -> list[Hashable]:
        return sorted_vertices(self.lift)

    @property
    def truncation_radius(self) -> int:
        return self.radius if self.truncation is None else self.truncation.radius

    @property
    def truncation_dim(self) -> int:
        return self.dim if self.truncation is None else self.truncation.dim

    @property
    def star_complete_radius(self) -> int:
        if self.complete:
            return self.radius
        return self.truncation_radius - self.truncation_dim

    def depth(self, vertex: Vertex) -> int:
        return self.complex.distance(self.base, vertex)

    def truncation_depth(self, vertex: Vertex) -> int:
        """Depth of ``vertex`` measured where the window is cut off."""
        if self.truncation is None:
            return self.depth(vertex)
        return self.truncation.depth[vertex]

    def is_star_complete(self, vertex: Vertex) -> bool:
        return self.complete or self.truncation_depth(vertex) <= self.star_complete_radius

    def require_star_complete(self, vertex: Vertex) -> None:
        if not self.is_star_complete(vertex):
            raise StarIncompleteError(
                f"vertex at depth {self.truncation_depth(vertex)} is beyond the star-complete "
                f"radius {self.star_complete_radius}",
                field="vertex",
                value=vertex,
            )

    def safe_degree(self, orbit: Hashable) -> int | None:
        """Largest degree to which row ``orbit`` of the growth matrix is exact.

        None when the window is the whole complex.
        """
        return self.horizon(self.lift[orbit])

    def horizon(self, vertex: Vertex) -> int | None:
        """Largest r such that every vertex within distance r of ``vertex`` is in the window."""
        if self.complete:
            return None
        return self.truncation_radius - self.truncation_depth(vertex)

    def members(self, orbit: Hashable) -> list[Vertex]:
        return [v for v in self.complex.sorted_vertices() if self.label[v] == orbit]
