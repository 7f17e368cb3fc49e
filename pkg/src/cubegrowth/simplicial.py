"""
simplicial.py

Objetivo del script:
Abstract simplicial complexes that always contain the empty face: links,
f-polynomials, joins, the flag test and Eulerian-sphere recognition.

A complex is stored by its facets; faces are enumerated on demand and cached.
The complex with no facets is {∅}, whose f-polynomial is 1.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Hashable, Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any

import networkx as nx

from cubegrowth.exactalg import Polynomial
from cubegrowth.exceptions import PreconditionError

logger = logging.getLogger(__name__)

Face = frozenset


def sort_key(vertex: Any) -> tuple:
    """Total order on mixed vertex identifiers, stable across runs."""
    if isinstance(vertex, bool):
        return (4, repr(vertex))
    if isinstance(vertex, int):
        return (0, vertex)
    if isinstance(vertex, str):
        return (1, vertex)
    if isinstance(vertex, tuple):
        return (2, tuple(sort_key(part) for part in vertex))
    if isinstance(vertex, frozenset):
        return (3, tuple(sorted(sort_key(part) for part in vertex)))
    return (4, repr(vertex))


def sorted_vertices(vertices: Iterable[Hashable]) -> list[Hashable]:
    return sorted(vertices, key=sort_key)


@dataclass(frozen=True)
class SimplicialComplex:
    facets: frozenset[Face]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> SimplicialComplex:
        """Build a complex from any generating faces, keeping only the maximal ones."""
        candidates = {frozenset(f) for f in facets}
        candidates.discard(frozenset())
        ordered = sorted(candidates, key=len, reverse=True)
        maximal: list[Face] = []
        for face in ordered:
            if not any(face < kept for kept in maximal):
                maximal.append(face)
        return cls(frozenset(maximal))

    @classmethod
    def empty(cls) -> SimplicialComplex:
        """The complex {∅}."""
        return cls(frozenset())

    @property
    def vertices(self) -> frozenset[Hashable]:
        return frozenset().union(*self.facets)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    @cached_property
    def faces(self) -> frozenset[Face]:
        found: set[Face] = {frozenset()}
        for facet in self.facets:
            members = tuple(facet)
            for size in range(1, len(members) + 1):
                found.update(frozenset(c) for c in combinations(members, size))
        return frozenset(found)

    def has_face(self, sigma: Iterable[Hashable]) -> bool:
        return frozenset(sigma) in self.faces

    def sorted_facets(self) -> list[list[Hashable]]:
        rows = [sorted_vertices(f) for f in self.facets]
        return sorted(rows, key=lambda row: (len(row), [sort_key(v) for v in row]))

    def __len__(self) -> int:
        return len(self.faces)


def f_polynomial(complex_: SimplicialComplex) -> Polynomial:
    """Face-count polynomial: coefficient of t^k is the number of faces with k vertices."""
    counts = Counter(len(face) for face in complex_.faces)
    top = max(counts)
    return Polynomial(tuple(counts.get(size, 0) for size in range(top + 1)))


def link(complex_: SimplicialComplex, sigma: Iterable[Hashable]) -> SimplicialComplex:
    sigma = frozenset(sigma)
    if sigma not in complex_.faces:
        raise PreconditionError(
            "link requires a face of the complex",
            field="sigma",
            value=sorted_vertices(sigma),
        )
    return SimplicialComplex.from_facets(f - sigma for f in complex_.facets if sigma <= f)


def _generating_faces(complex_: SimplicialComplex) -> list[Face]:
    return list(complex_.facets) or [frozenset()]


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; overlapping vertex names are tagged (0, v) and (1, v)."""
    if first.vertices & second.vertices:
        first = SimplicialComplex.from_facets(
            [(0, v) for v in f] for f in first.facets
        )
        second = SimplicialComplex.from_facets(
            [(1, v) for v in f] for f in second.facets
        )
    return SimplicialComplex.from_facets(
        a | b for a in _generating_faces(first) for b in _generating_faces(second)
    )


def skeleton_graph(complex_: SimplicialComplex) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(complex_.vertices)
    for facet in complex_.facets:
        graph.add_edges_from(combinations(facet, 2))
    return graph


def flag_complex(graph: nx.Graph) -> SimplicialComplex:
    """Clique complex of a graph: every clique spans a simplex."""
    return SimplicialComplex.from_facets(nx.find_cliques(graph))


def non_flag_witness(complex_: SimplicialComplex) -> list[Hashable] | None:
    """A maximal clique of the 1-skeleton that spans no face, if one exists."""
    for clique in nx.find_cliques(skeleton_graph(complex_)):
        if frozenset(clique) not in complex_.faces:
            return sorted_vertices(clique)
    return None


def is_flag(complex_: SimplicialComplex) -> bool:
    return non_flag_witness(complex_) is None


def euler_char(complex_: SimplicialComplex) -> int:
    """Sum over nonempty faces of (-1)^dim; the complex {∅} has 0."""
    return int(1 - f_polynomial(complex_).evaluate(-1))


def sphere_euler_char(dimension: int) -> int:
    """χ(S^d) = 1 + (-1)^d, with χ(S^-1) = 0."""
    return 1 + (-1) ** dimension


def is_eulerian_sphere(complex_: SimplicialComplex, dimension: int) -> bool:
    if dimension < -1:
        return False
    if dimension == -1:
        return not complex_.facets
    if not complex_.facets or not complex_.is_pure or complex_.dimension != dimension:
        return False
    for sigma in complex_.faces:
        expected = sphere_euler_char(dimension - len(sigma))
        if euler_char(link(complex_, sigma)) != expected:
            logger.debug(
                "Face %s has link χ %s, expected %s",
                sorted_vertices(sigma),
                euler_char(link(complex_, sigma)),
                expected,
            )
            return False
    return True


def dehn_sommerville_check(complex_: SimplicialComplex, n: int) -> bool:
    """Exact test of f(t - 1) = (-1)^n f(-t)."""
    f = f_polynomial(complex_)
    shifted = f.compose(Polynomial((-1, 1)))
    mirrored = f.compose(Polynomial((0, -1)))
    return shifted == mirrored * ((-1) ** n)
