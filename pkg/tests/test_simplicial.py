"""
test_simplicial.py

Objetivo del script:
Tests for simplicial complexes: f-polynomials, links, joins, flag and
Eulerian sphere checks.

Copyright 2026 Henry Academy.
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import random

import networkx as nx
import pytest

from cubegrowth.exactalg import Polynomial
from cubegrowth.exceptions import PreconditionError
from cubegrowth.simplicial import (
    SimplicialComplex,
    dehn_sommerville_check,
    euler_char,
    f_polynomial,
    flag_complex,
    is_eulerian_sphere,
    is_flag,
    join,
    link,
    non_flag_witness,
    skeleton_graph,
    sorted_vertices,
)

PATH3 = SimplicialComplex.from_facets([["a", "b"], ["b", "c"]])


def random_complex(rng: random.Random, vertices: int = 7) -> SimplicialComplex:
    return SimplicialComplex.from_facets(
        rng.sample(range(vertices), rng.randint(1, 3)) for _ in range(rng.randint(1, 5))
    )


def random_sphere(rng: random.Random) -> tuple[SimplicialComplex, int]:
    """Join of small spheres (point pairs, cycles, simplex boundaries) and its dimension."""
    sphere, dimension = SimplicialComplex.empty(), -1
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["points", "cycle", "boundary"])
        if kind == "points":
            factor, factor_dim = SimplicialComplex.from_facets([[0], [1]]), 0
        elif kind == "cycle":
            m = rng.randint(4, 5)
            factor = SimplicialComplex.from_facets([[i, (i + 1) % m] for i in range(m)])
            factor_dim = 1
        else:
            k = rng.randint(3, 4)
            factor = SimplicialComplex.from_facets(
                [v for v in range(k) if v != skip] for skip in range(k)
            )
            factor_dim = k - 2
        sphere = join(sphere, factor)
        dimension += factor_dim + 1
    return sphere, dimension


class TestConstruction:
    """Tests for building complexes from generating faces."""

    @pytest.mark.unit
    def test_only_maximal_faces_are_kept(self):
        complex_ = SimplicialComplex.from_facets([["a", "b"], ["a"], ["b", "c"], []])

        assert complex_.facets == frozenset({frozenset("ab"), frozenset("bc")})

    @pytest.mark.unit
    def test_empty_complex(self):
        empty = SimplicialComplex.empty()

        assert empty.dimension == -1
        assert empty.faces == frozenset({frozenset()})
        assert f_polynomial(empty) == Polynomial((1,))

    @pytest.mark.unit
    def test_sorted_vertices_mixes_types(self):
        assert sorted_vertices(["b", 2, ("a", 1), 1, "a"]) == [1, 2, "a", "b", ("a", 1)]


class TestFPolynomial:
    """Tests for face-count polynomials."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("name", "coeffs"),
        [
            ("two_points", (1, 2)),
            ("c4", (1, 4, 4)),
            ("c5", (1, 5, 5)),
            ("octahedron", (1, 6, 12, 8)),
            ("empty", (1,)),
        ],
    )
    def test_nerve_f_polynomials(self, nerves, name, coeffs):
        assert f_polynomial(nerves[name]) == Polynomial(coeffs)

    @pytest.mark.unit
    def test_simplex(self):
        simplex = SimplicialComplex.from_facets([["a", "b", "c"]])

        assert f_polynomial(simplex) == Polynomial((1, 3, 3, 1))


class TestLinkAndJoin:
    """Tests for links of faces and joins."""

    @pytest.mark.unit
    def test_link_of_cycle_vertex(self, nerves):
        assert link(nerves["c4"], ["a"]) == SimplicialComplex.from_facets([["b"], ["d"]])

    @pytest.mark.unit
    def test_link_of_facet_is_empty_complex(self, nerves):
        assert link(nerves["c4"], ["a", "b"]) == SimplicialComplex.empty()

    @pytest.mark.unit
    def test_link_of_non_face(self, nerves):
        with pytest.raises(PreconditionError):
            link(nerves["c4"], ["a", "c"])

    @pytest.mark.unit
    def test_join_of_point_pairs_is_a_square(self, nerves):
        joined = join(nerves["two_points"], nerves["two_points"])

        assert f_polynomial(joined) == Polynomial((1, 4, 4))
        assert (0, "a") in joined.vertices

    @pytest.mark.unit
    def test_join_with_empty_complex(self, nerves):
        assert join(nerves["c5"], SimplicialComplex.empty()) == nerves["c5"]


class TestFlag:
    """Tests for the flag condition and clique complexes."""

    @pytest.mark.unit
    def test_cycle_nerves_are_flag(self, nerves):
        assert is_flag(nerves["c4"])
        assert is_flag(nerves["octahedron"])
        assert is_flag(nerves["empty"])

    @pytest.mark.unit
    def test_triangle_boundary_is_not_flag(self, nerves):
        assert non_flag_witness(nerves["triangle_boundary"]) == ["a", "b", "c"]

    @pytest.mark.unit
    def test_flag_complex_of_graphs(self):
        assert f_polynomial(flag_complex(nx.cycle_graph(4))) == Polynomial((1, 4, 4))
        assert f_polynomial(flag_complex(nx.complete_graph(3))) == Polynomial((1, 3, 3, 1))

    @pytest.mark.unit
    def test_skeleton_graph(self, nerves):
        graph = skeleton_graph(nerves["octahedron"])

        assert graph.number_of_nodes() == 6
        assert graph.number_of_edges() == 12


class TestEulerian:
    """Tests for Euler characteristics, sphere checks and Dehn-Sommerville."""

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("name", "chi"),
        [("two_points", 2), ("c4", 0), ("c5", 0), ("octahedron", 2), ("empty", 0)],
    )
    def test_euler_char(self, nerves, name, chi):
        assert euler_char(nerves[name]) == chi

    @pytest.mark.unit
    @pytest.mark.parametrize(
        ("name", "dimension"),
        [
            ("two_points", 0),
            ("c4", 1),
            ("c5", 1),
            ("octahedron", 2),
            ("triangle_boundary", 1),
            ("empty", -1),
        ],
    )
    def test_spheres(self, nerves, name, dimension):
        assert is_eulerian_sphere(nerves[name], dimension)

    @pytest.mark.unit
    def test_path_is_not_a_sphere(self, nerves):
        assert not is_eulerian_sphere(PATH3, 1)
        assert not is_eulerian_sphere(nerves["c4"], 2)

    @pytest.mark.unit
    def test_dehn_sommerville(self, nerves):
        assert dehn_sommerville_check(nerves["c4"], 2)
        assert dehn_sommerville_check(nerves["octahedron"], 3)
        assert not dehn_sommerville_check(PATH3, 2)


class TestRandomComplexes:
    """Counting identities on seeded random complexes."""

    @pytest.mark.unit
    @pytest.mark.parametrize("seed", range(15))
    def test_euler_char_is_additive(self, seed: int):
        rng = random.Random(seed)
        first, second = random_complex(rng), random_complex(rng)
        union = SimplicialComplex.from_facets(first.facets | second.facets)
        common = SimplicialComplex.from_facets(first.faces & second.faces)

        assert euler_char(union) == euler_char(first) + euler_char(second) - euler_char(common)

    @pytest.mark.unit
    @pytest.mark.parametrize("seed", range(15))
    def test_join_multiplies_f_polynomials(self, seed: int):
        rng = random.Random(seed)
        first, second = random_complex(rng), random_complex(rng, vertices=5)

        assert f_polynomial(join(first, second)) == f_polynomial(first) * f_polynomial(second)

    @pytest.mark.unit
    @pytest.mark.parametrize("seed", range(10))
    def test_joins_of_spheres_satisfy_dehn_sommerville(self, seed: int):
        sphere, dimension = random_sphere(random.Random(seed))

        assert is_eulerian_sphere(sphere, dimension)
        assert dehn_sommerville_check(sphere, dimension + 1)
        assert euler_char(sphere) == 1 + (-1) ** dimension
